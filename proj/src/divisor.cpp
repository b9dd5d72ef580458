#include "folium/divisor.hpp"

#include <stdexcept>

namespace folium {

DivisorClass operator+(DivisorClass a, const DivisorClass& b) {
    if (a.e.size() != b.e.size()) throw std::invalid_argument("divisor: lattice rank mismatch");
    a.h += b.h;
    for (std::size_t i = 0; i < a.e.size(); ++i) a.e[i] += b.e[i];
    return a;
}

DivisorClass operator-(DivisorClass a, const DivisorClass& b) {
    if (a.e.size() != b.e.size()) throw std::invalid_argument("divisor: lattice rank mismatch");
    a.h -= b.h;
    for (std::size_t i = 0; i < a.e.size(); ++i) a.e[i] -= b.e[i];
    return a;
}

DivisorClass operator*(const Integer& c, DivisorClass a) {
    a.h *= c;
    for (auto& x : a.e) x *= c;
    return a;
}

bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.h == b.h && a.e == b.e;
}

Integer DivisorClass::dot(const DivisorClass& o) const {
    if (e.size() != o.e.size()) throw std::invalid_argument("divisor: lattice rank mismatch");
    Integer s = h * o.h;
    for (std::size_t i = 0; i < e.size(); ++i) s -= e[i] * o.e[i];
    return s;
}

}  // namespace folium
