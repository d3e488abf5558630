#include "pof.hpp"

namespace rm {

APoly reduce_apoly(const APoly& a, const UniPoly& modulus) {
    APoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] % modulus;
    AField f(modulus);
    palg::trim(f, r);
    return r;
}

PofInvertResult pof_invert(const UniPoly& q, const UniPoly& a) {
    AField f(q);
    try {
        return {f.inv(a % q), std::nullopt};
    } catch (const SplitSignal& s) {
        return {std::nullopt, s.factor.monic()};
    }
}

SplitSeq<APoly> pof_gcd(const UniPoly& q, const APoly& f, const APoly& g) {
    return split_run<APoly>(q, [&](const UniPoly& m) {
        AField fld(m);
        return palg::gcd_monic(fld, reduce_apoly(f, m), reduce_apoly(g, m));
    });
}

SplitSeq<APoly> pof_squarefree(const UniPoly& q, const APoly& f) {
    return split_run<APoly>(q, [&](const UniPoly& m) {
        AField fld(m);
        return palg::squarefree_part(fld, reduce_apoly(f, m));
    });
}

UniPoly crt_recombine(const SplitSeq<UniPoly>& branches) {
    if (branches.empty()) throw MathError("crt_recombine of empty sequence");
    UniPoly m = branches.branches[0].modulus;
    UniPoly v = branches.branches[0].payload % m;
    for (std::size_t i = 1; i < branches.size(); ++i) {
        const auto& b = branches.branches[i];
        v = crt_pair(m, v, b.modulus, b.payload % b.modulus);
        m = m * b.modulus;
    }
    return v;
}

APoly crt_recombine_poly(const SplitSeq<APoly>& branches) {
    if (branches.empty()) throw MathError("crt_recombine_poly of empty sequence");
    std::size_t deg = 0;
    for (const auto& b : branches.branches) deg = std::max(deg, b.payload.size());
    APoly out(deg);
    for (std::size_t k = 0; k < deg; ++k) {
        SplitSeq<UniPoly> coeffs;
        for (const auto& b : branches.branches)
            coeffs.branches.push_back({b.modulus, k < b.payload.size() ? b.payload[k] : UniPoly{}});
        out[k] = crt_recombine(coeffs);
    }
    // Trim against the full modulus.
    UniPoly full = branches.branches[0].modulus;
    for (std::size_t i = 1; i < branches.size(); ++i) full = full * branches.branches[i].modulus;
    AField f(full);
    palg::trim(f, out);
    return out;
}

} // namespace rm
