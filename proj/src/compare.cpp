#include "ybalg/compare.hpp"

#include "ybalg/onepar.hpp"

namespace ybalg {

Op2 okado_rhat(const Scalar& q, const Scalar& x) {
    Scalar q2 = q * q;
    Scalar diag = q2 * x - Scalar(1);
    Scalar off = q * (x - Scalar(1));
    Scalar zero;
    return Op2(2, Matrix{{diag, zero, zero, zero},
                         {zero, q2 - Scalar(1), off, zero},
                         {zero, off, (q2 - Scalar(1)) * x, zero},
                         {zero, zero, zero, diag}});
}

Op2 twisted_prop1_rhat(const Scalar& q, const Scalar& sigma, const Scalar& x) {
    return twist_compose(prop1_op(quadratic_algebra(sigma), q, x));
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::identical: return "identical";
        case Verdict::proportional: return "proportional";
        case Verdict::differ: return "differ";
    }
    return "?";
}

namespace {

CompareEntry compare_one(const Scalar& q, const Scalar& x) {
    Matrix ok = okado_rhat(q, x).mat();
    Matrix tw = twisted_prop1_rhat(q, Scalar(0), x).mat();
    CompareEntry e{x, ok, tw, ok - tw, Verdict::differ, Scalar(0)};
    if (e.difference.is_zero()) {
        e.verdict = Verdict::identical;
        e.ratio = 1;
        return e;
    }
    // Look for twisted = r * okado with r taken from the first nonzero okado entry.
    for (std::size_t i = 0; i < ok.rows(); ++i)
        for (std::size_t j = 0; j < ok.cols(); ++j) {
            if (ok(i, j).is_zero()) continue;
            Scalar r = tw(i, j) / ok(i, j);
            if ((tw - r * ok).is_zero()) {
                e.verdict = Verdict::proportional;
                e.ratio = r;
            }
            return e;
        }
    return e;
}

}  // namespace

CompareReport compare_at(const Scalar& q, const std::vector<Scalar>& xs) {
    CompareReport report{q, Scalar(0), {}};
    for (const auto& x : xs) report.entries.push_back(compare_one(q, x));
    return report;
}

CompareReport compare_q1(const std::vector<Scalar>& xs) { return compare_at(Scalar(1), xs); }

}  // namespace ybalg
