#include "sqfdist/congruence.hpp"

namespace sqf {

void validate(const CongruenceSystem& system) {
    const auto& e = system.entries;
    if (e.empty()) throw std::invalid_argument("empty congruence system");
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i].modulus.degree() < 1)
            throw std::invalid_argument("modulus at index " + std::to_string(i) +
                                        " must have degree >= 1");
        if (e[i].residue.degree() >= e[i].modulus.degree())
            throw std::invalid_argument("residue at index " + std::to_string(i) +
                                        " has degree >= its modulus");
    }
    for (size_t i = 0; i < e.size(); ++i)
        for (size_t j = i + 1; j < e.size(); ++j)
            if (gcd(RatPoly(e[i].modulus), RatPoly(e[j].modulus)).degree() != 0)
                throw NonCoprimeModuli(i, j);
}

RatPoly crt_solve(const CongruenceSystem& system) {
    validate(system);
    RatPoly f = system.entries[0].residue;
    RatPoly m(system.entries[0].modulus);
    for (size_t i = 1; i < system.entries.size(); ++i) {
        RatPoly mi(system.entries[i].modulus);
        const RatPoly& ri = system.entries[i].residue;
        auto [g, s, t] = xgcd(m, mi);
        // g = 1 after validation; s*m + t*mi = 1
        // f_new = f*t*mi + ri*s*m is f mod m and ri mod mi
        f = f * t * mi + ri * s * m;
        m = m * mi;
        f = mod(f, m);
    }
    return f;
}

IntPoly moduli_product(const CongruenceSystem& system) {
    IntPoly h = IntPoly::constant(1);
    for (const auto& e : system.entries) h *= e.modulus;
    return h;
}

namespace {

mpq_class fractional_part(const mpq_class& q) {
    // representative of q + Z in [0, 1)
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    mpq_class r = q - mpq_class(fl);
    r.canonicalize();
    return r;
}

}  // namespace

IntegerizeResult integerize(const RatPoly& f0, const IntPoly& h, int correction_degree) {
    if (h.is_zero()) throw std::invalid_argument("integerize: zero multiplier");
    if (correction_degree < 0) throw std::invalid_argument("integerize: negative correction degree");
    int t = 0;
    while (h.coeff(t) == 0) ++t;  // trailing power of h
    if (h.coeff(t) != 1 && h.coeff(t) != -1)
        throw std::invalid_argument("integerize: trailing coefficient of h is not a unit");
    const mpz_class unit = h.coeff(t);

    // Solve coefficient-by-coefficient from the lowest power: the x^(t+i)
    // coefficient of f0 + h*f1 is f0[t+i] + sum_{j<i} h[t+i-j]*a_j + unit*a_i,
    // which pins the class of a_i modulo Z once a_0..a_{i-1} are chosen.
    std::vector<mpq_class> cosets;
    std::vector<mpq_class> f1;
    for (int i = 0; i <= correction_degree; ++i) {
        mpq_class acc = f0.coeff(t + i);
        for (int j = 0; j < i; ++j) acc += mpq_class(h.coeff(t + i - j)) * f1[j];
        mpq_class a = fractional_part(unit == 1 ? mpq_class(-acc) : acc);
        cosets.push_back(a);
        f1.push_back(a);
    }
    RatPoly correction{std::move(f1)};
    RatPoly full = f0 + RatPoly(h) * correction;
    if (!full.is_integral())
        throw std::invalid_argument(
            "integerize: correction degree too small, result has fractional coefficients");
    return {std::move(cosets), full.to_intpoly()};
}

}  // namespace sqf
