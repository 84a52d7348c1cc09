#include "mcx/sphere_calculus.hpp"

#include <sstream>

namespace mcx {

HomotopyClass HomotopyClass::contractible() { return HomotopyClass{}; }

HomotopyClass HomotopyClass::empty_complex() {
    HomotopyClass c;
    c.spheres_[-1] = 1;
    return c;
}

HomotopyClass HomotopyClass::sphere(int dim, BigInt count) {
    if (dim < -1) fail(ErrorCode::InvalidArgument, "sphere dimension below -1");
    if (count <= 0) fail(ErrorCode::InvalidArgument, "sphere count must be positive");
    std::map<int, BigInt> s;
    s[dim] = std::move(count);
    return wedge_of(std::move(s));
}

HomotopyClass HomotopyClass::wedge_of(std::map<int, BigInt> spheres) {
    std::erase_if(spheres, [](const auto& kv) { return kv.second == 0; });
    for (const auto& [d, c] : spheres) {
        if (d < -1) fail(ErrorCode::Malformed, "sphere dimension below -1");
        if (c < 0) fail(ErrorCode::Malformed, "negative sphere count");
    }
    // The formal empty complex never mixes with honest spheres. It may carry
    // a multiplicity, which keeps the wedge/suspension laws total.
    if (spheres.count(-1) && spheres.size() > 1)
        fail(ErrorCode::Malformed, "S^-1 may only occur as the sole summand");
    HomotopyClass c;
    c.spheres_ = std::move(spheres);
    return c;
}

bool HomotopyClass::is_empty_complex() const {
    return spheres_.size() == 1 && spheres_.begin()->first == -1 &&
           spheres_.begin()->second == 1;
}

BigInt HomotopyClass::reduced_euler() const {
    BigInt chi = 0;
    for (const auto& [d, c] : spheres_) {
        // (-1)^d with d possibly -1
        bool odd = ((d % 2) + 2) % 2 == 1;
        chi += odd ? -c : c;
    }
    return chi;
}

std::map<int, BigInt> HomotopyClass::poincare_polynomial() const { return spheres_; }

std::string HomotopyClass::to_text() const {
    if (is_contractible()) return "pt";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : spheres_) {
        if (!first) os << " v ";
        first = false;
        if (c != 1) os << c << "*";
        os << "S^" << d;
    }
    return os.str();
}

HomotopyClass wedge(const HomotopyClass& a, const HomotopyClass& b) {
    if (a.is_contractible()) return b;
    if (b.is_contractible()) return a;
    std::map<int, BigInt> s = a.spheres();
    for (const auto& [d, c] : b.spheres()) s[d] += c;
    return HomotopyClass::wedge_of(std::move(s)); // rejects S^-1 mixed with spheres
}

HomotopyClass suspension(const HomotopyClass& a, int k) {
    if (k < 0) fail(ErrorCode::InvalidArgument, "suspension shift must be >= 0");
    if (k == 0 || a.is_contractible()) return a;
    std::map<int, BigInt> s;
    for (const auto& [d, c] : a.spheres()) s[d + k] = c;
    return HomotopyClass::wedge_of(std::move(s));
}

HomotopyClass join(const HomotopyClass& a, const HomotopyClass& b) {
    if (a.is_contractible() || b.is_contractible()) return HomotopyClass::contractible();
    // the convolution already makes the empty complex the identity
    std::map<int, BigInt> s;
    for (const auto& [p, cp] : a.spheres())
        for (const auto& [q, cq] : b.spheres()) s[p + q + 1] += cp * cq;
    return HomotopyClass::wedge_of(std::move(s));
}

} // namespace mcx
