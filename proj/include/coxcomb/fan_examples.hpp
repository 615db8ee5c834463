#pragma once

#include <string>
#include <vector>

#include "coxcomb/fan.hpp"

namespace coxcomb {

/// Standard marked fan of CP^n: rays e_1..e_n and -e_1-...-e_n on the boundary
/// of the n-simplex. For n = 0 the single label is a ghost vertex in R^0.
inline Fan projective_space(long n, const std::string& stem = "x") {
    if (n < 0) raise(errc::bad_parameters, "projective_space(n) needs n >= 0");
    std::vector<std::string> labels;
    std::vector<Vec> rays;
    for (long i = 0; i <= n; ++i) {
        labels.push_back(stem + std::to_string(i));
        Vec r(static_cast<size_t>(n), Scalar(0));
        if (i < n) r[static_cast<size_t>(i)] = Scalar(1);
        else
            for (long j = 0; j < n; ++j) r[static_cast<size_t>(j)] = Scalar(-1);
        rays.push_back(r);
    }
    std::vector<Face> maximal;
    for (long drop = 0; drop <= n; ++drop) {
        Face f;
        for (long i = 0; i <= n; ++i)
            if (i != drop) f.push_back(static_cast<int>(i));
        if (!f.empty()) maximal.push_back(f);
    }
    return make_fan(labels, maximal, static_cast<size_t>(n), rays, FieldContext(),
                    "example:projective_space(" + std::to_string(n) + ")");
}

/// Product fan: labels concatenated, complex is the join, rays block-embedded.
inline Fan product(const Fan& a, const Fan& b) {
    long d = 0;
    if (a.field.d != 0 && b.field.d != 0 && a.field.d != b.field.d)
        raise(errc::mixed_field_context, "product factors live in different quadratic fields");
    d = a.field.d != 0 ? a.field.d : b.field.d;

    Fan out;
    out.field.d = d;
    out.ambient_dim = a.ambient_dim + b.ambient_dim;
    std::set<std::string> used(a.labels.begin(), a.labels.end());
    out.labels = a.labels;
    for (const auto& l : b.labels) {
        std::string name = l;
        while (used.count(name)) name += "'";
        used.insert(name);
        out.labels.push_back(name);
    }
    for (const Vec& r : a.rays) {
        Vec v(out.ambient_dim, Scalar(0));
        for (size_t i = 0; i < a.ambient_dim; ++i) v[i] = r[i];
        out.rays.push_back(v);
    }
    for (const Vec& r : b.rays) {
        Vec v(out.ambient_dim, Scalar(0));
        for (size_t i = 0; i < b.ambient_dim; ++i) v[a.ambient_dim + i] = r[i];
        out.rays.push_back(v);
    }
    int shift = static_cast<int>(a.size());
    for (const Face& fa : a.faces)
        for (const Face& fb : b.faces) {
            Face f = fa;
            for (int s : fb) f.push_back(s + shift);
            out.faces.insert(f);
        }
    out.provenance.push_back("product");
    return out;
}

/// Fan of the Calabi-Eckmann manifold CE(p, q): join of the CP^p and CP^q fans
/// on p+q+2 labels x0..xp, y0..yq.
inline Fan calabi_eckmann(long p, long q) {
    if (p < 0 || q < 0) raise(errc::bad_parameters, "calabi_eckmann(p, q) needs p, q >= 0");
    Fan f = product(projective_space(p, "x"), projective_space(q, "y"));
    f.provenance = {"example:calabi_eckmann(" + std::to_string(p) + "," + std::to_string(q) + ")"};
    return f;
}

/// The classical complex structure datum on CE(p, q): the row
/// (1,...,1, alpha,...,alpha) spans h_Sigma; alpha must be non-real for the
/// real-part projection onto ker A^R to be an isomorphism.
inline std::vector<std::vector<ComplexScalar>> calabi_eckmann_structure(long p, long q, const ComplexScalar& alpha) {
    std::vector<ComplexScalar> row;
    for (long i = 0; i <= p; ++i) row.push_back(ComplexScalar(Scalar(1)));
    for (long j = 0; j <= q; ++j) row.push_back(alpha);
    return {row};
}

/// Hirzebruch surface fan: rays (1,0), (0,1), (-1,a), (0,-1) with the four
/// consecutive 2-cones.
inline Fan hirzebruch(long a) {
    if (a < 0) raise(errc::bad_parameters, "hirzebruch(a) needs a >= 0");
    std::vector<std::string> labels = {"u0", "u1", "u2", "u3"};
    std::vector<Vec> rays = {
        {Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}, {Scalar(-1), Scalar(a)}, {Scalar(0), Scalar(-1)}};
    std::vector<Face> maximal = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    return make_fan(labels, maximal, 2, rays, FieldContext(), "example:hirzebruch(" + std::to_string(a) + ")");
}

/// Hopf fan on labels {z1, z2, t}: one-dimensional rays a1 > 0 > a2 with
/// lambda_1 a1 + lambda_2 a2 = 0 and mu_1 a1 + mu_2 a2 + a3 = 0, where
/// zeta_j = lambda_j + i mu_j. The third vertex is a ghost. Rational input is
/// scaled to integral rays.
inline Fan hopf_surface(const ComplexScalar& zeta1, const ComplexScalar& zeta2) {
    Scalar l1 = zeta1.re, l2 = zeta2.re, m1 = zeta1.im, m2 = zeta2.im;
    if (l1.sign() <= 0 || l2.sign() <= 0)
        raise(errc::bad_parameters, "hopf_surface needs Re(zeta_1), Re(zeta_2) > 0");
    Scalar a1 = l2, a2 = -l1, a3 = m2 * l1 - m1 * l2;
    long d = 0;
    for (const Scalar& x : {a1, a2, a3})
        if (!x.is_rational()) d = x.field_d();
    if (d == 0) {
        Int scale = 1;
        for (const Scalar& x : {a1, a2, a3}) {
            Int den = denominator(x.rational_part());
            scale = scale / boost::multiprecision::gcd(scale, den) * den;
        }
        Scalar f = Scalar(Rational(scale));
        a1 *= f;
        a2 *= f;
        a3 *= f;
    }
    return make_fan({"z1", "z2", "t"}, {{0}, {1}}, 1, {{a1}, {a2}, {a3}}, FieldContext(d),
                    "example:hopf_surface(" + zeta1.to_string() + "," + zeta2.to_string() + ")");
}

/// Complex structure on the Hopf fan: span{(zeta_1, zeta_2, i)}. This row lies
/// in ker A^C and its real span is exactly ker A^R.
inline std::vector<std::vector<ComplexScalar>> hopf_structure(const ComplexScalar& zeta1, const ComplexScalar& zeta2) {
    return {{zeta1, zeta2, ComplexScalar::i()}};
}

/// Dispatcher for CLI specs: "projective_space:2", "calabi_eckmann(1,2)",
/// "hirzebruch:3", "hopf_surface:1+1i,1+1i", "product:<spec>;<spec>".
inline Fan example_fan(const std::string& spec) {
    std::string name = spec, args;
    size_t colon = spec.find(':');
    size_t paren = spec.find('(');
    if (colon != std::string::npos && (paren == std::string::npos || colon < paren)) {
        name = spec.substr(0, colon);
        args = spec.substr(colon + 1);
    } else if (paren != std::string::npos) {
        if (spec.back() != ')') raise(errc::bad_parameters, "unbalanced parentheses in example spec '" + spec + "'");
        name = spec.substr(0, paren);
        args = spec.substr(paren + 1, spec.size() - paren - 2);
    }
    auto split = [](const std::string& s, char sep) {
        std::vector<std::string> parts;
        std::string cur;
        int depth = 0;
        for (char c : s) {
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (c == sep && depth == 0) {
                parts.push_back(cur);
                cur.clear();
            } else
                cur += c;
        }
        if (!cur.empty()) parts.push_back(cur);
        return parts;
    };
    auto as_long = [&](const std::string& s) {
        try {
            return std::stol(s);
        } catch (...) {
            raise(errc::bad_parameters, "expected an integer parameter in '" + spec + "'");
        }
    };
    if (name == "projective_space") {
        auto p = split(args, ',');
        if (p.size() != 1) raise(errc::bad_parameters, "projective_space takes one parameter");
        return projective_space(as_long(p[0]));
    }
    if (name == "calabi_eckmann") {
        auto p = split(args, ',');
        if (p.size() != 2) raise(errc::bad_parameters, "calabi_eckmann takes two parameters");
        return calabi_eckmann(as_long(p[0]), as_long(p[1]));
    }
    if (name == "hirzebruch") {
        auto p = split(args, ',');
        if (p.size() != 1) raise(errc::bad_parameters, "hirzebruch takes one parameter");
        return hirzebruch(as_long(p[0]));
    }
    if (name == "hopf_surface") {
        auto p = split(args, ',');
        if (p.size() != 2) raise(errc::bad_parameters, "hopf_surface takes two complex parameters");
        return hopf_surface(ComplexScalar::parse(p[0]), ComplexScalar::parse(p[1]));
    }
    if (name == "product") {
        auto p = split(args, ';');
        if (p.size() < 2) raise(errc::bad_parameters, "product takes ';'-separated example specs");
        Fan acc = example_fan(p[0]);
        for (size_t i = 1; i < p.size(); ++i) acc = product(acc, example_fan(p[i]));
        return acc;
    }
    raise(errc::bad_parameters, "unknown example '" + name + "'");
}

} // namespace coxcomb
