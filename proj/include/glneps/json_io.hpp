#pragma once

// JSON serialization of exact values.  A cyclotomic is emitted as its dense
// integer coefficient vector over the canonical basis of Q(zeta_N) in
// ascending basis-exponent order, over a common denominator, plus a float
// approximation for human readers.

#include <glneps/cyclotomic.hpp>
#include <glneps/errors.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace glneps {

inline nlohmann::json to_json(const Cyclotomic& x) {
    long N = x.conductor();
    std::vector<long> basis = Cyclotomic::basis_exponents(N);
    mpz_class den = 1;
    for (const auto& [e, c] : x.coeffs()) den = lcm(den, c.get_den());
    nlohmann::json num = nlohmann::json::array();
    for (long e : basis) {
        auto it = x.coeffs().find(e);
        mpz_class v = 0;
        if (it != x.coeffs().end()) v = it->second.get_num() * (den / it->second.get_den());
        if (!v.fits_slong_p())
            throw scale_exceeded("cyclotomic coefficient too large for JSON output");
        num.push_back(static_cast<std::int64_t>(v.get_si()));
    }
    if (!den.fits_slong_p()) throw scale_exceeded("denominator too large for JSON output");
    auto z = x.approx();
    return nlohmann::json{{"conductor", N},
                          {"num", std::move(num)},
                          {"den", static_cast<std::int64_t>(den.get_si())},
                          {"re", z.real()},
                          {"im", z.imag()}};
}

inline Cyclotomic cyclotomic_from_json(const nlohmann::json& j) {
    long N = j.at("conductor").get<long>();
    long den = j.at("den").get<long>();
    std::vector<long> basis = Cyclotomic::basis_exponents(N);
    const auto& num = j.at("num");
    if (num.size() != basis.size())
        throw precondition_error("coefficient vector length does not match the basis");
    std::vector<std::pair<long, Rational>> terms;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        long n = num[i].get<long>();
        if (n == 0) continue;
        Rational r(n, den);
        r.canonicalize();
        terms.emplace_back(basis[i], r);
    }
    return Cyclotomic::from_terms(N, terms);
}

inline nlohmann::json to_json(const QHalfScalar& x) {
    nlohmann::json j = to_json(x.c());
    j["q"] = x.q();
    j["half_exponent"] = x.half_exponent();
    auto z = x.approx();
    j["re"] = z.real();
    j["im"] = z.imag();
    return j;
}

inline QHalfScalar qhalf_from_json(const nlohmann::json& j) {
    return QHalfScalar(j.at("q").get<long>(), cyclotomic_from_json(j),
                       j.at("half_exponent").get<long>());
}

}  // namespace glneps
