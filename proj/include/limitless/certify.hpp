#pragma once

#include <vector>

#include "limitless/interval.hpp"
#include "limitless/polynomial.hpp"

namespace limitless {

enum class BoundKind {
    basic_estimate_k,  // K with |p(x) - p(a) - p'(a)(x - a)| <= K (x - a)^2
    derivative_bound_m // M with |p'| <= M, hence |p(x) - p(a)| <= M |x - a|
};

// A sound upper bound for the named sup over the named domain. Soundness is
// the defining contract: the true sup never exceeds value.
struct CertifiedBound {
    Rational value;
    BoundKind quantity = BoundKind::basic_estimate_k;
    Interval domain;
    int depth = 0;
};

// K >= sup{ |r(x, a)| : x, a in domain } with r the tangent remainder of p,
// computed by interval evaluation over a 2^depth x 2^depth uniform
// subdivision of domain^2.
CertifiedBound basic_estimate_constant(const Polynomial& p, const Interval& domain, int depth);

// M >= sup{ |p'(x)| : x in domain }, same subdivision scheme in one variable.
CertifiedBound derivative_bound(const Polynomial& p, const Interval& domain, int depth);

// Hull of the sub-box enclosures of p over domain: a certified range bound
// that tightens with depth.
Interval range_enclosure(const Polynomial& p, const Interval& domain, int depth);

// A finite witness that p is non-decreasing on its domain: p' >= C is
// certified by interval evaluation, and the partition walks from A to B by
// steps no longer than C / K, each step verified by exact comparison.
struct MonotonicityCertificate {
    Polynomial p;
    Interval domain;
    Rational c;
    CertifiedBound k;
    std::vector<Rational> partition; // A = t_0 < ... < t_n = B
    std::vector<Rational> values;    // p(t_i), exact
};

// Throws DerivativeLowerBoundNotCertified if some sub-box enclosure of p'
// drops below C at the given depth, InvalidC if C <= 0.
MonotonicityCertificate monotonicity_certificate(const Polynomial& p, const Interval& domain,
                                                 const Rational& c, int depth);

// Independent re-check of a certificate's arithmetic: partition ordering and
// step bound, exact values, and monotone value chain. Throws Error with a
// description of the first violated invariant.
void validate(const MonotonicityCertificate& cert);

} // namespace limitless
