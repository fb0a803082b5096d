#include "factoradic/verify.hpp"

#include <algorithm>

#include "factoradic/codec.hpp"
#include "factoradic/inversions.hpp"
#include "factoradic/modular.hpp"
#include "factoradic/reference.hpp"
#include "factoradic/format.hpp"
#include "factoradic/rules.hpp"

namespace factoradic::reference {

namespace {

class SuiteRecorder {
public:
    explicit SuiteRecorder(std::string name) { result_.name = std::move(name); }

    // Detail strings are only built on failure.
    template <typename Describe>
    void check(bool ok, Describe&& describe) {
        ++result_.cases;
        if (!ok) {
            if (result_.failures == 0) {
                result_.first_failure = describe();
            }
            ++result_.failures;
        }
    }

    SuiteResult finish() { return std::move(result_); }

private:
    SuiteResult result_;
};

SuiteResult factoradic_order(std::size_t smax) {
    SuiteRecorder rec("factoradic-order");
    for (std::size_t s = 1; s <= smax; ++s) {
        auto all = permutations_in_factoradic_order(s);
        for (std::size_t n = 0; n < all.size(); ++n) {
            TamePermutation fast = encode(Integer(n), s);
            rec.check(fast == all[n], [&] {
                return "encode(" + std::to_string(n) + ", " + std::to_string(s) +
                       ") = " + format_sequence(fast.entries()) + ", expected " +
                       format_sequence(all[n].entries());
            });
        }
    }
    return rec.finish();
}

SuiteResult roundtrip(std::size_t smax) {
    SuiteRecorder rec("roundtrip");
    Integer limit = factorial(smax);
    for (Integer n = 0; n < limit; ++n) {
        for (std::size_t s = minimal_prefix_length(n); s <= smax; ++s) {
            Integer back = decode(encode(n, s));
            rec.check(back == n, [&] {
                return "decode(encode(" + to_decimal(n) + ", " + std::to_string(s) +
                       ")) = " + to_decimal(back);
            });
        }
    }
    return rec.finish();
}

SuiteResult sum_exactness(std::size_t smax) {
    SuiteRecorder rec("sum-exactness");
    for (std::size_t s = 1; s <= smax; ++s) {
        Integer limit = factorial(s);
        for (Integer n = 0; n < limit; ++n) {
            Integer sum = weighted_inversion_sum(inversions_bruteforce(encode(n, s).as_prefix()));
            rec.check(sum == n, [&] {
                return "s = " + std::to_string(s) + ": sum inv(i,j) j! = " + to_decimal(sum) +
                       " for n = " + to_decimal(n);
            });
        }
    }
    return rec.finish();
}

SuiteResult periodicity(std::size_t smax) {
    SuiteRecorder rec("residue-periodicity");
    for (std::size_t s = 1; s <= std::min<std::size_t>(smax, 6); ++s) {
        Integer period = factorial(s);
        for (Integer n = 0; n < 2 * period; ++n) {
            InversionSet here = prefix_inversions(n, s);
            InversionSet later = prefix_inversions(n + period, s);
            // The s-prefix of the full form must agree with the reduced path.
            InversionSet direct =
                inversions_bruteforce(encode(n).with_length(std::max(s, minimal_prefix_length(n)))
                                          .as_prefix()
                                          .first(s));
            rec.check(here == later && here == direct, [&] {
                return "s = " + std::to_string(s) + ", n = " + to_decimal(n);
            });
        }
    }
    return rec.finish();
}

SuiteResult duality(std::size_t smax) {
    SuiteRecorder rec("digit-inversion-duality");
    for (std::size_t s = 1; s <= smax; ++s) {
        for (const TamePermutation& p : permutations_in_factoradic_order(s)) {
            PermutationPrefix prefix = p.as_prefix();
            FactoradicDigits counts = inversion_counts_by_larger(inversion_set(prefix));
            FactoradicDigits digits = digits_from_permutation(prefix);
            rec.check(counts == digits && digits == digits_bruteforce(prefix),
                           [&] { return "permutation " + format_sequence(p.entries()); });
        }
    }
    return rec.finish();
}

SuiteResult prefix_residue(std::uint64_t nmax, std::uint64_t kmax) {
    SuiteRecorder rec("prefix-residue");
    for (std::uint64_t n = 0; n < nmax; ++n) {
        for (Modulus k = 1; k <= kmax; ++k) {
            Integer value(static_cast<unsigned long>(n));
            Residue fast = residue(value, k);
            Residue slow = mod_direct(value, k);
            rec.check(fast == slow, [&] {
                return std::to_string(n) + " mod " + std::to_string(k) + ": got " +
                       std::to_string(fast.value) + ", expected " + std::to_string(slow.value);
            });
        }
    }
    return rec.finish();
}

SuiteResult rules(std::uint64_t nmax, std::uint64_t kmax) {
    SuiteRecorder rec("rule-evaluation");
    for (Modulus k = 2; k <= kmax; ++k) {
        DivisibilityRule rule = generate_rule(k);
        Integer period = factorial(static_cast<std::size_t>(k));
        for (std::uint64_t n = 0; n < nmax; ++n) {
            Integer value(static_cast<unsigned long>(n));
            PermutationPrefix prefix =
                encode(value % period, static_cast<std::size_t>(k)).as_prefix();
            Residue got = evaluate_rule(rule, prefix);
            rec.check(got.value == n % k && got == residue_from_prefix(prefix, k), [&] {
                return "rule(" + std::to_string(k) + ") on n = " + std::to_string(n);
            });
        }
    }
    return rec.finish();
}

}  // namespace

bool VerifyReport::passed() const noexcept {
    return std::all_of(suites.begin(), suites.end(),
                       [](const SuiteResult& s) { return s.passed(); });
}

VerifyReport run_verification(const VerifyOptions& options) {
    VerifyReport report;
    report.suites.push_back(factoradic_order(options.smax));
    report.suites.push_back(roundtrip(options.smax));
    report.suites.push_back(sum_exactness(options.smax));
    report.suites.push_back(periodicity(options.smax));
    report.suites.push_back(duality(options.smax));
    report.suites.push_back(prefix_residue(options.nmax, options.kmax));
    report.suites.push_back(rules(options.nmax, options.kmax));
    return report;
}

}  // namespace factoradic::reference
