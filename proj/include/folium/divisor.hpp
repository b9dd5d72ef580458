#ifndef FOLIUM_DIVISOR_HPP
#define FOLIUM_DIVISOR_HPP

#include <vector>

#include "folium/rational.hpp"

namespace folium {

/// Divisor class on an iterated blow-up of the plane, written in the orthogonal
/// basis (H, E_1*, ..., E_k*) of pullback classes; the intersection form is
/// diag(+1, -1, ..., -1).
struct DivisorClass {
    Integer h;
    std::vector<Integer> e;

    explicit DivisorClass(int k = 0) : h(0), e(k, Integer(0)) {}

    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b);
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b);
    friend DivisorClass operator*(const Integer& c, DivisorClass a);
    friend bool operator==(const DivisorClass& a, const DivisorClass& b);

    Integer dot(const DivisorClass& o) const;
};

}  // namespace folium

#endif
