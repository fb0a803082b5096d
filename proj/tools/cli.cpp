#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "factoradic/codec.hpp"
#include "factoradic/error.hpp"
#include "factoradic/format.hpp"
#include "factoradic/integer.hpp"
#include "factoradic/inversions.hpp"
#include "factoradic/modular.hpp"
#include "factoradic/reference.hpp"
#include "factoradic/rules.hpp"
#include "factoradic/verify.hpp"

namespace factoradic::cli {

namespace {

using Json = nlohmann::ordered_json;

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t parse_count(const std::string& text, const char* what) {
    Integer v = parse_integer(text);
    if (!v.fits_ulong_p()) {
        throw Error(ErrorCode::ParseError, std::string(what) + " '" + text + "' is too large");
    }
    return v.get_ui();
}

std::string read_argument(const std::string& arg, std::istream& in) {
    if (arg != "-") {
        return arg;
    }
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Json entries_json(std::span<const Entry> entries) {
    return Json(std::vector<Entry>(entries.begin(), entries.end()));
}

std::string ordering_name(std::strong_ordering ord) {
    if (ord < 0) return "precedes";
    if (ord > 0) return "follows";
    return "equal";
}

// Random integer with exactly `size` factoradic digits.
Integer random_with_digits(std::size_t size, std::mt19937_64& rng) {
    std::vector<Digit> digits(size, 0);
    for (std::size_t i = 1; i < size; ++i) {
        digits[i] = std::uniform_int_distribution<Digit>(0, static_cast<Digit>(i))(rng);
    }
    if (size > 1 && digits[size - 1] == 0) {
        digits[size - 1] = 1;
    }
    return integer_from_digits(FactoradicDigits(unchecked, std::move(digits)));
}

template <typename F>
double time_ms(F&& f) {
    auto start = std::chrono::steady_clock::now();
    f();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Integers as tame permutations: factoradic codec, residues and divisibility rules",
                 "factoradic"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "plain";
    app.add_option("--format", format_name, "Output format: plain, latex or json")
        ->check(CLI::IsMember({"plain", "latex", "json"}));

    std::string number;
    std::string modulus;
    std::string perm_a;
    std::string perm_b;
    std::optional<std::string> length;
    bool check = false;
    bool primes = false;
    reference::VerifyOptions verify_options;
    std::size_t bench_size = 100000;

    auto* encode_cmd = app.add_subcommand("encode", "Factoradic form of N");
    encode_cmd->add_option("N", number, "Non-negative decimal integer")->required();
    encode_cmd->add_option("--len", length, "Writing length S (N < S! required)");

    auto* decode_cmd = app.add_subcommand("decode", "Integer represented by a permutation");
    decode_cmd->add_option("PERM", perm_a, "Permutation, e.g. \"(2, 3, 0, 1)\", or - for stdin")
        ->required();

    auto* digits_cmd = app.add_subcommand("digits", "Factoradic digits of N");
    digits_cmd->add_option("N", number, "Non-negative decimal integer")->required();
    digits_cmd->add_option("--len", length, "Digit count S (N < S! required)");

    auto* inversions_cmd = app.add_subcommand("inversions", "Inversion set of a prefix");
    inversions_cmd->add_option("PREFIX", perm_a, "Distinct entries, or - for stdin")->required();

    auto* mod_cmd = app.add_subcommand("mod", "N mod K from the K-prefix inversion set");
    mod_cmd->add_option("N", number, "Non-negative decimal integer")->required();
    mod_cmd->add_option("K", modulus, "Modulus >= 1")->required();
    mod_cmd->add_flag("--check", check, "Also compute the direct remainder; exit 2 on mismatch");

    auto* rule_cmd = app.add_subcommand("rule", "Divisibility rule for modulus K");
    rule_cmd->add_option("K", modulus, "Modulus >= 2")->required();

    auto* table_cmd = app.add_subcommand("table", "Rules for k = 2..KMAX");
    table_cmd->add_option("KMAX", modulus, "Largest modulus")->required();
    table_cmd->add_flag("--primes", primes, "Prime moduli only");

    auto* compare_cmd = app.add_subcommand("compare", "Factoradic order of two permutations");
    compare_cmd->add_option("P", perm_a, "First permutation, or - for stdin")->required();
    compare_cmd->add_option("Q", perm_b, "Second permutation, or - for stdin")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Check fast paths against brute force");
    verify_cmd->add_option("--smax", verify_options.smax, "Largest exhaustive length")
        ->capture_default_str();
    verify_cmd->add_option("--nmax", verify_options.nmax, "Residue sweep bound")
        ->capture_default_str();
    verify_cmd->add_option("--kmax", verify_options.kmax, "Largest modulus")
        ->capture_default_str();

    auto* bench_cmd = app.add_subcommand("bench", "Time encode, decode and inversion counting");
    bench_cmd->add_option("--size", bench_size, "Number of factoradic digits")
        ->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    }

    try {
        Format format = parse_format(format_name);
        bool json = format == Format::json;
        std::optional<std::size_t> len;
        if (length) {
            len = static_cast<std::size_t>(parse_count(*length, "length"));
        }

        if (*encode_cmd) {
            Integer n = parse_integer(number);
            TamePermutation p = len ? encode(n, len) : encode(n);
            if (json) {
                out << Json{{"n", to_decimal(n)}, {"permutation", entries_json(p.entries())}}.dump();
            } else {
                out << format_sequence(p.entries());
            }
        } else if (*decode_cmd) {
            TamePermutation p(parse_entries(read_argument(perm_a, in)));
            Integer n = decode(p);
            out << (json ? Json{{"n", to_decimal(n)}}.dump() : to_decimal(n));
        } else if (*digits_cmd) {
            Integer n = parse_integer(number);
            FactoradicDigits d = digits_from_integer(n, len);
            if (json) {
                std::vector<Digit> values(d.values().begin(), d.values().end());
                out << Json{{"n", to_decimal(n)}, {"digits", values}}.dump();
            } else {
                out << format_sequence(d);
            }
        } else if (*inversions_cmd) {
            PermutationPrefix prefix(parse_entries(read_argument(perm_a, in)));
            InversionSet set = inversion_set(prefix);
            out << (json ? inversions_json(set) : format_inversions(set));
        } else if (*mod_cmd) {
            Integer n = parse_integer(number);
            Modulus k = parse_count(modulus, "modulus");
            Residue r = residue(n, k);
            if (check) {
                Residue direct = reference::mod_direct(n, k);
                if (direct != r) {
                    throw VerificationFailure("residue " + std::to_string(r.value) +
                                              " disagrees with direct remainder " +
                                              std::to_string(direct.value));
                }
            }
            if (json) {
                out << Json{{"n", to_decimal(n)}, {"k", k}, {"residue", r.value}}.dump();
            } else {
                out << r.value;
            }
        } else if (*rule_cmd) {
            out << render_rule(generate_rule(parse_count(modulus, "modulus")), format);
        } else if (*table_cmd) {
            auto rules = rule_table(parse_count(modulus, "modulus"), primes);
            if (json) {
                out << render_table_json(rules);
            } else {
                for (std::size_t n = 0; n < rules.size(); ++n) {
                    if (n > 0) out << '\n';
                    out << rules[n].modulus << ": " << render_rule(rules[n], format);
                }
            }
        } else if (*compare_cmd) {
            if (perm_a == "-" && perm_b == "-") {
                throw Error(ErrorCode::ParseError, "only one argument may be read from stdin");
            }
            TamePermutation p(parse_entries(read_argument(perm_a, in)));
            TamePermutation q(parse_entries(read_argument(perm_b, in)));
            std::string name = ordering_name(compare_factoradic(p, q));
            out << (json ? Json{{"ordering", name}}.dump() : name);
        } else if (*verify_cmd) {
            reference::VerifyReport report = reference::run_verification(verify_options);
            if (json) {
                Json suites = Json::array();
                for (const auto& s : report.suites) {
                    suites.push_back(Json{{"name", s.name},
                                          {"cases", s.cases},
                                          {"failures", s.failures},
                                          {"first_failure", s.first_failure}});
                }
                out << Json{{"passed", report.passed()}, {"suites", suites}}.dump();
            } else {
                for (std::size_t n = 0; n < report.suites.size(); ++n) {
                    const auto& s = report.suites[n];
                    if (n > 0) out << '\n';
                    out << (s.passed() ? "PASS " : "FAIL ") << s.name << " (" << s.cases
                        << " cases";
                    if (!s.passed()) {
                        out << ", " << s.failures << " failed; first: " << s.first_failure;
                    }
                    out << ')';
                }
            }
            out << '\n';
            return report.passed() ? kExitOk : kExitVerifyFailed;
        } else if (*bench_cmd) {
            if (bench_size == 0) {
                throw Error(ErrorCode::EmptySequence, "bench size must be at least 1");
            }
            check_length(bench_size, Limits{});
            std::mt19937_64 rng(20250101);
            Integer n = random_with_digits(bench_size, rng);
            std::optional<TamePermutation> p;
            Integer back;
            double encode_ms = time_ms([&] { p = encode(n); });
            double decode_ms = time_ms([&] { back = decode(*p); });
            double count_ms = time_ms([&] { (void)inversion_counts(p->as_prefix()); });
            if (back != n) {
                throw VerificationFailure("roundtrip mismatch at size " + std::to_string(bench_size));
            }
            if (json) {
                out << Json{{"size", bench_size},
                            {"encode_ms", encode_ms},
                            {"decode_ms", decode_ms},
                            {"inversion_count_ms", count_ms}}
                           .dump();
            } else {
                out << "size " << bench_size << '\n'
                    << "encode " << encode_ms << " ms\n"
                    << "decode " << decode_ms << " ms\n"
                    << "inversion-count " << count_ms << " ms";
            }
        }
        out << '\n';
    } catch (const VerificationFailure& e) {
        err << "verification failed: " << e.what() << '\n';
        return kExitVerifyFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    return kExitOk;
}

}  // namespace factoradic::cli
