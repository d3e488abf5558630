#ifndef RM_POF_HPP
#define RM_POF_HPP

#include <functional>
#include <utility>
#include <vector>

#include "fields.hpp"
#include "polyalg.hpp"

namespace rm {

// Polynomial in one variable over A = Q[T]/<q>: coefficients are reduced
// representatives in Q[T].
using APoly = PolyV<AField>;

// A computation split over pairwise coprime factors of a squarefree
// modulus: the branch moduli multiply back to it.
template <class Payload>
struct SplitSeq {
    struct Branch {
        UniPoly modulus;
        Payload payload;
    };
    std::vector<Branch> branches;

    bool empty() const { return branches.empty(); }
    std::size_t size() const { return branches.size(); }
};

// Runs fn over Q[T]/<q>; whenever fn raises SplitSignal with a nontrivial
// factor of the current modulus, reruns it modulo both cofactors. fn
// receives the branch modulus and must reduce its own inputs by it.
template <class Payload>
SplitSeq<Payload> split_run(const UniPoly& q,
                            const std::function<Payload(const UniPoly&)>& fn) {
    SplitSeq<Payload> out;
    std::vector<UniPoly> stack{q.monic()};
    while (!stack.empty()) {
        UniPoly m = std::move(stack.back());
        stack.pop_back();
        try {
            out.branches.push_back({m, fn(m)});
        } catch (const SplitSignal& s) {
            UniPoly g = s.factor.monic();
            if (g.degree() <= 0 || g.degree() >= m.degree())
                throw MathError("split signal with trivial factor");
            UniPoly h = (m / g).monic();
            stack.push_back(std::move(h));
            stack.push_back(std::move(g));
        }
    }
    return out;
}

// Reduce the representative coefficients of an A-polynomial modulo a new
// (smaller) modulus.
APoly reduce_apoly(const APoly& a, const UniPoly& modulus);

// Inversion in A: either the inverse or a nontrivial monic factor of q.
struct PofInvertResult {
    std::optional<UniPoly> inverse;
    std::optional<UniPoly> factor;
};
PofInvertResult pof_invert(const UniPoly& q, const UniPoly& a);

// Monic GCD over A with dynamic evaluation: on each branch q_i the payload
// H_i is the monic gcd of F and G mod q_i.
SplitSeq<APoly> pof_gcd(const UniPoly& q, const APoly& f, const APoly& g);

// Squarefree part of a monic F over A, with splitting.
SplitSeq<APoly> pof_squarefree(const UniPoly& q, const APoly& f);

// Chinese remainder over branch moduli: value with the given residues.
UniPoly crt_recombine(const SplitSeq<UniPoly>& branches);

// CRT applied coefficientwise to A-polynomials.
APoly crt_recombine_poly(const SplitSeq<APoly>& branches);

} // namespace rm

#endif
