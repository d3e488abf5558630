#ifndef RM_BIPOLY_HPP
#define RM_BIPOLY_HPP

#include <string>
#include <vector>

#include "upoly.hpp"

namespace rm {

// Dense bivariate polynomial in (U, T) over Q, stored as a vector of
// UniPoly-in-T coefficients indexed by the power of U. Trailing zero rows
// are trimmed; the zero polynomial has no rows.
class BiPoly {
  public:
    BiPoly() = default;
    explicit BiPoly(std::vector<UniPoly> rows) : rows_(std::move(rows)) { trim(); }
    static BiPoly constant(const Rat& a);
    static BiPoly from_T(const UniPoly& p); // p(T)
    static BiPoly from_U(const UniPoly& p); // p(U)

    bool is_zero() const { return rows_.empty(); }
    bool is_constant() const;
    int deg_u() const { return static_cast<int>(rows_.size()) - 1; }
    int deg_t() const;
    int total_degree() const;
    const UniPoly& coeff_u(int i) const; // coefficient of U^i, a poly in T
    Rat coeff(int i, int j) const { return coeff_u(i).coeff(j); }
    const std::vector<UniPoly>& rows() const { return rows_; }

    bool operator==(const BiPoly& o) const { return rows_ == o.rows_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    BiPoly operator-() const;
    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly operator*(const Rat& a) const;

    BiPoly derivative_t() const;
    BiPoly derivative_u() const;
    BiPoly swap_vars() const; // exchange the roles of U and T

    UniPoly eval_u(const Rat& u) const; // polynomial in T
    UniPoly eval_t(const Rat& t) const; // polynomial in U
    Rat eval(const Rat& u, const Rat& t) const;

    // Leading coefficient as a polynomial in T w.r.t. U (and conversely).
    UniPoly lc_u() const;
    UniPoly lc_t() const;

    // Division in T by a divisor whose leading T-coefficient is a nonzero
    // rational constant.
    std::pair<BiPoly, BiPoly> divrem_t(const BiPoly& d) const;
    BiPoly rem_t(const BiPoly& d) const { return divrem_t(d).second; }

    // Content w.r.t. the chosen variable: gcd of the coefficients.
    UniPoly content_in_t() const; // gcd over Q[T] of the U-coefficients
    UniPoly content_in_u() const;
    BiPoly divide_by_t_poly(const UniPoly& g) const; // exact division by g(T)
    BiPoly divide_by_u_poly(const UniPoly& g) const;

    std::string to_string(const std::string& uvar = "U", const std::string& tvar = "T") const;

  private:
    void trim();
    std::vector<UniPoly> rows_;
};

// Resultant of a and b with respect to T: a polynomial in U. Computed by
// evaluation at enough U-points and interpolation; exact over Q.
UniPoly resultant_t(const BiPoly& a, const BiPoly& b);

// gcd of a and b viewed in Q(U)[T], made primitive: used by verification
// oracles only.
BiPoly gcd_t(const BiPoly& a, const BiPoly& b);

// Lagrange interpolation through (x_i, y_i), pairwise distinct x_i.
UniPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

} // namespace rm

#endif
