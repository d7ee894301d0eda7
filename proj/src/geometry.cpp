// geometry.cpp - point parsing

#include <tessera/geometry.hpp>

namespace tessera {

ExactPoint ExactPoint::parse(std::string_view text) {
  std::size_t comma = text.find(',');
  if (comma == std::string_view::npos)
    throw ParseError("expected ',' between coordinates", text.size());
  Qs3 x = Qs3::parse(text.substr(0, comma));
  try {
    Qs3 y = Qs3::parse(text.substr(comma + 1));
    return {x, y};
  } catch (const ParseError& e) {
    throw ParseError(e.message, comma + 1 + e.position);
  }
}

}  // namespace tessera
