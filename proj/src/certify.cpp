#include "limitless/certify.hpp"

#include <stdexcept>
#include <string>

namespace limitless {

namespace {

void require_depth(int depth) {
    if (depth < 0) throw std::invalid_argument("subdivision depth must be >= 0");
}

} // namespace

CertifiedBound basic_estimate_constant(const Polynomial& p, const Interval& domain, int depth) {
    require_depth(depth);
    BivariatePolynomial r = tangent_remainder(p);
    CertifiedBound out{Rational(0), BoundKind::basic_estimate_k, domain, depth};
    if (r.is_zero()) return out;
    long n = 1L << depth;
    for (long i = 0; i < n; ++i) {
        Interval bx = domain.subinterval(i, n);
        for (long j = 0; j < n; ++j) {
            Interval ba = domain.subinterval(j, n);
            out.value = max(out.value, interval_eval(r, bx, ba).mag());
        }
    }
    return out;
}

CertifiedBound derivative_bound(const Polynomial& p, const Interval& domain, int depth) {
    require_depth(depth);
    Polynomial d = derivative(p);
    CertifiedBound out{Rational(0), BoundKind::derivative_bound_m, domain, depth};
    if (d.is_zero()) return out;
    long n = 1L << depth;
    for (long i = 0; i < n; ++i)
        out.value = max(out.value, interval_eval(d, domain.subinterval(i, n)).mag());
    return out;
}

Interval range_enclosure(const Polynomial& p, const Interval& domain, int depth) {
    require_depth(depth);
    long n = 1L << depth;
    Interval acc = interval_eval(p, domain.subinterval(0, n));
    for (long i = 1; i < n; ++i) {
        Interval e = interval_eval(p, domain.subinterval(i, n));
        acc = Interval(min(acc.lo(), e.lo()), max(acc.hi(), e.hi()));
    }
    return acc;
}

MonotonicityCertificate monotonicity_certificate(const Polynomial& p, const Interval& domain,
                                                 const Rational& c, int depth) {
    if (c.sign() <= 0) throw InvalidC("monotonicity certification requires C > 0");
    require_depth(depth);
    if (domain.width().is_zero())
        throw InvalidInterval("monotonicity domain must have positive width");

    Polynomial d = derivative(p);
    long n = 1L << depth;
    for (long i = 0; i < n; ++i) {
        Interval box = domain.subinterval(i, n);
        Interval e = interval_eval(d, box);
        if (e.lo() < c)
            throw DerivativeLowerBoundNotCertified(
                "p' >= " + c.str() + " not certified: enclosure [" + e.lo().str() + ", " +
                e.hi().str() + "] on [" + box.lo().str() + ", " + box.hi().str() +
                "] at depth " + std::to_string(depth));
    }

    MonotonicityCertificate cert;
    cert.p = p;
    cert.domain = domain;
    cert.c = c;
    cert.k = basic_estimate_constant(p, domain, depth);

    Rational width = domain.width();
    long steps = 1;
    if (!cert.k.value.is_zero()) {
        // smallest N with width / N <= C / K
        Rational ratio = width * cert.k.value / c;
        Integer num_steps = ceil_div(ratio.num(), ratio.den());
        if (num_steps > 100000000)
            throw Error("certificate would need " + num_steps.get_str() +
                        " steps; C is too small for this domain");
        steps = num_steps.get_si() < 1 ? 1 : num_steps.get_si();
    }
    for (long i = 0; i <= steps; ++i) {
        Rational t = domain.lo() + width * Rational(i) / Rational(steps);
        cert.partition.push_back(t);
        cert.values.push_back(p.eval(t));
    }
    return cert;
}

void validate(const MonotonicityCertificate& cert) {
    auto fail = [](const std::string& why) { throw Error("invalid certificate: " + why); };

    if (cert.c.sign() <= 0) fail("C must be positive");
    if (cert.partition.size() < 2) fail("partition needs at least two points");
    if (cert.partition.size() != cert.values.size()) fail("partition/value length mismatch");
    if (cert.partition.front() != cert.domain.lo()) fail("partition does not start at A");
    if (cert.partition.back() != cert.domain.hi()) fail("partition does not end at B");

    bool linear_case = cert.k.value.is_zero();
    if (linear_case && cert.partition.size() != 2) fail("K = 0 certificate must be a single step");

    for (std::size_t i = 0; i + 1 < cert.partition.size(); ++i) {
        Rational step = cert.partition[i + 1] - cert.partition[i];
        if (step.sign() <= 0) fail("partition not strictly increasing");
        if (!linear_case && step * cert.k.value > cert.c) fail("step exceeds C / K");
    }
    for (std::size_t i = 0; i < cert.partition.size(); ++i)
        if (cert.p.eval(cert.partition[i]) != cert.values[i]) fail("stored value is not p(t_i)");
    for (std::size_t i = 0; i + 1 < cert.values.size(); ++i)
        if (cert.values[i] > cert.values[i + 1]) fail("values not non-decreasing");
}

} // namespace limitless
