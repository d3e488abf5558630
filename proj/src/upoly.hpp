#ifndef RM_UPOLY_HPP
#define RM_UPOLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace rm {

// Dense univariate polynomial over Q, lowest degree first. The zero
// polynomial has an empty coefficient vector; otherwise the leading
// coefficient is nonzero.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(const Rat& a);
    static UniPoly variable();                 // T
    static UniPoly monomial(int deg, const Rat& a);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && rm::is_one(c_[0]); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for 0
    const Rat& lc() const;
    const Rat& operator[](int i) const;
    Rat coeff(int i) const { return i >= 0 && i < (int)c_.size() ? c_[i] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rat& a) const;

    UniPoly shifted(int k) const; // * T^k
    UniPoly derivative() const;
    Rat eval(const Rat& x) const;

    bool is_monic() const { return !is_zero() && rm::is_one(lc()); }
    UniPoly monic() const;

    // Euclidean division; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const;
    UniPoly operator/(const UniPoly& d) const; // exact or quotient
    UniPoly operator%(const UniPoly& d) const;

    std::string to_string(const std::string& var = "T") const;

  private:
    void trim();
    std::vector<Rat> c_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);                       // monic
// g = gcd(a,b) monic, and s,t with s*a + t*b = g.
UniPoly ext_gcd(const UniPoly& a, const UniPoly& b, UniPoly& s, UniPoly& t);
UniPoly squarefree_part(const UniPoly& a);                             // monic
bool is_squarefree(const UniPoly& a);

// Inverse of a modulo m (gcd must be 1), reduced mod m.
std::optional<UniPoly> invert_mod(const UniPoly& a, const UniPoly& m);
UniPoly mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& m);
UniPoly powmod(const UniPoly& a, unsigned long e, const UniPoly& m);
// h(g) mod m by Horner.
UniPoly compose_mod(const UniPoly& h, const UniPoly& g, const UniPoly& m);

// Sylvester-matrix resultant over Q (rows of a first). Convention:
// res(a, b) = det S(a, b) with the a-rows on top.
Rat resultant(const UniPoly& a, const UniPoly& b);

// Chinese remainder for two coprime moduli.
UniPoly crt_pair(const UniPoly& m1, const UniPoly& v1, const UniPoly& m2, const UniPoly& v2);

// Power sums p_0..p_k of the roots of monic q, via Newton's identities.
std::vector<Rat> root_power_sums(const UniPoly& q, int k);

// All rational roots of a nonzero polynomial.
std::vector<Rat> rational_roots(const UniPoly& a);

} // namespace rm

#endif
