#ifndef FOLIUM_PARSE_HPP
#define FOLIUM_PARSE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "folium/mpoly.hpp"

namespace folium {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parse a polynomial expression: integers, rationals a/b, the given variable
/// names, the operators + - * ^ and parentheses. No implicit multiplication.
MPoly parse_poly(const std::string& text, const std::vector<std::string>& var_names);

/// Canonical serialization; parse_poly round-trips it.
std::string poly_str(const MPoly& p, const std::vector<std::string>& var_names);

}  // namespace folium

#endif
