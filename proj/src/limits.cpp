#include "aperylab/limits.hpp"

namespace aperylab {

namespace {

constexpr long kModelDigits = 24;

struct ModelState {
    long best_n = -1;
    Real best_err = Real(0L, kModelDigits);
    bool found = false;
    long rising_streak = 0;
};

Real pow10(long e) { return Real(10L, kModelDigits).pow_si(e); }

// Feeds |d_{n-2}|, |d_{n-1}|, |d_n| into the geometric model; returns the
// error estimate or a negative value when the model does not apply yet.
Real model_error(const Real& d2, const Real& d0) {
    if (d0.is_zero()) return Real(0L, kModelDigits);
    if (d2.is_zero()) return Real(-1L, kModelDigits);
    Real rho2 = d0 / d2;
    if (rho2 >= Real(1L, kModelDigits)) return Real(-1L, kModelDigits);
    Real rho = rho2.sqrt();
    return d0 * rho / (Real(1L, kModelDigits) - rho) * 4;
}

template <typename Diff, typename MakeValue>
ApproxLimit run_estimator(long count, long start, long P, LimitMethod method, bool require_target,
                          Diff&& diff_mag, MakeValue&& make_value) {
    if (count - start < 1) throw input_error("limit estimator: too few terms");
    const Real target = pow10(-(P + 2));

    std::vector<Real> mags;  // |d_n| for n = start+1 .. count-1
    mags.reserve(static_cast<size_t>(count - start));
    bool all_zero = true;
    for (long n = start + 1; n < count; ++n) {
        Real m = diff_mag(n);
        if (!m.is_zero()) all_zero = false;
        mags.push_back(m);
    }
    if (all_zero) {
        ApproxLimit out{make_value(count - 1, P), Real(0L, kModelDigits), count - 1, method};
        return out;
    }

    long rising = 0;
    long chosen = -1;
    Real chosen_err = Real(0L, kModelDigits);
    for (size_t k = 2; k < mags.size(); ++k) {
        Real err = model_error(mags[k - 2], mags[k]);
        if (err.sign() < 0) {
            // ratio of successive differences >= 1
            if (!mags[k].is_zero() && !mags[k - 1].is_zero() && mags[k] >= mags[k - 1]) ++rising;
            else rising = 0;
            continue;
        }
        rising = 0;
        long n = start + 1 + static_cast<long>(k);
        if (err <= target) {
            chosen = n;
            chosen_err = err;
            break;
        }
        chosen = n;
        chosen_err = err;
    }
    if (rising >= 3) throw nonconvergence_error("limit estimator: successive differences not shrinking");
    if (chosen < 0) throw precision_error("limit estimator: no usable difference triple");
    if (require_target && !(chosen_err <= target))
        throw precision_error("limit estimator: error estimate " + chosen_err.str(3) +
                              " did not reach 10^-" + std::to_string(P));
    return ApproxLimit{make_value(chosen, P), chosen_err, chosen, method};
}

std::vector<Rat> aitken_accelerate(const std::vector<Rat>& r, long start) {
    std::vector<Rat> out;
    for (size_t n = static_cast<size_t>(start) + 2; n < r.size(); ++n) {
        Rat den = r[n] - r[n - 1] * Rat(2) + r[n - 2];
        if (den.is_zero()) {
            out.push_back(r[n]);
            continue;
        }
        Rat d = r[n] - r[n - 1];
        out.push_back(r[n] - d * d / den);
    }
    return out;
}

ApproxLimit limit_of_rationals(const std::vector<Rat>& ratios, long P, LimitMethod method,
                               long start) {
    auto diff = [&](long n) {
        return Real(ratios[static_cast<size_t>(n)] - ratios[static_cast<size_t>(n - 1)], kModelDigits)
            .abs();
    };
    auto value = [&](long n, long digits) { return Real(ratios[static_cast<size_t>(n)], digits); };
    return run_estimator(static_cast<long>(ratios.size()), start, P, method, true, diff, value);
}

} // namespace

ApproxLimit apery_limit(const SeqPair& pair, long P, LimitMethod method) {
    if (pair.a.size() != pair.b.size() || pair.a.size() < 4)
        throw input_error("apery_limit: need matching a/b with at least 4 terms");
    std::vector<Rat> ratios(pair.a.size());
    for (size_t n = 0; n < pair.a.size(); ++n) {
        if (pair.a[n].is_zero()) throw input_error("apery_limit: a_n vanishes");
        ratios[n] = pair.b[n] / pair.a[n];
    }
    long start = std::max(pair.normalization.b_first_index, 1L);
    if (method == LimitMethod::aitken) {
        std::vector<Rat> acc = aitken_accelerate(ratios, start);
        ApproxLimit out = limit_of_rationals(acc, P, method, 0);
        out.method = LimitMethod::aitken;
        return out;
    }
    return limit_of_rationals(ratios, P, method, start);
}

ApproxLimit estimate_limit(const std::vector<Real>& ratios, long P, LimitMethod method, long start,
                           bool require_target) {
    auto diff = [&](long n) {
        return (ratios[static_cast<size_t>(n)] - ratios[static_cast<size_t>(n - 1)])
            .abs()
            .to_digits(kModelDigits);
    };
    auto value = [&](long n, long digits) { return ratios[static_cast<size_t>(n)].to_digits(digits); };
    return run_estimator(static_cast<long>(ratios.size()), start, P, method, require_target, diff,
                         value);
}

} // namespace aperylab
