#include <cmath>
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pisot/algebraic.h"
#include "pisot/cantor.h"
#include "pisot/crystal.h"
#include "pisot/io.h"
#include "pisot/quantum.h"
#include "pisot/spacing.h"
#include "pisot/substitution.h"
#include "pisot/words.h"

using namespace pisot;

namespace {

struct GlobalFlags {
    std::string format;
    unsigned precision_bits = 64;
    std::optional<std::uint64_t> seed;
    std::string out;
};

struct SubstSource {
    std::string spec;
    std::string name;
};

Substitution load_substitution(const SubstSource &src) {
    if (!src.spec.empty() && !src.name.empty()) {
        throw std::invalid_argument("give either --spec or --name, not both");
    }
    if (!src.spec.empty()) return read_substitution_spec(src.spec);
    if (src.name == "fibonacci") return Substitution::fibonacci();
    if (src.name == "pell") return Substitution::pell();
    if (src.name == "padovan") return Substitution::padovan();
    if (src.name == "thue_morse") return Substitution::thue_morse();
    if (src.name.empty()) throw std::invalid_argument("a substitution is required (--spec or --name)");
    throw std::invalid_argument("unknown substitution name " + src.name);
}

void add_subst_source(CLI::App *cmd, SubstSource &src) {
    cmd->add_option("--spec", src.spec, "Substitution spec file")->check(CLI::ExistingFile);
    cmd->add_option("--name", src.name, "Built-in substitution")
        ->check(CLI::IsMember({"fibonacci", "pell", "padovan", "thue_morse"}));
}

Letter letter_of(const Substitution &sigma, const std::string &symbol) {
    if (symbol.empty()) return 0;
    auto idx = sigma.alphabet()->index_of(symbol);
    if (!idx) throw std::invalid_argument("letter " + symbol + " is not in the alphabet");
    return *idx;
}

Rational parse_rational(const std::string &text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    auto dot = text.find('.');
    Rational q;
    try {
        if (dot == std::string::npos) {
            q = Rational(text, 10);
        } else {
            std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            mpz_class scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), 10, text.size() - dot - 1);
            q = Rational(mpz_class(digits, 10), scale);
        }
    } catch (const std::invalid_argument &) {
        throw std::invalid_argument("cannot parse rational " + text);
    }
    q.canonicalize();
    return q;
}

Word parse_word_or_throw(const AlphabetRef &alphabet, const std::string &text) {
    Word w = Word::parse(alphabet, text);
    if (w.empty()) throw std::invalid_argument("word must be nonempty");
    return w;
}

std::string dump(const nlohmann::ordered_json &j) { return j.dump(2) + "\n"; }

nlohmann::ordered_json gap_json(const GapStats &g) {
    return {{"schema", kReportSchema},    {"count", g.count},
            {"mean", g.mean},              {"variance", g.variance},
            {"min_gap", g.min_gap},        {"max_gap", g.max_gap},
            {"distinct_gaps", g.distinct_gaps}};
}

/// Writes an angle run in the requested format, plus an optional SVG file.
void emit_angles(const GlobalFlags &flags, const AngleList &angles, const SvgOptions &svg,
                 const std::string &svg_path) {
    std::string fmt = flags.format.empty() ? "csv" : flags.format;
    if (fmt == "csv") {
        write_output(flags.out, angles_csv(angles));
    } else if (fmt == "svg") {
        write_output(flags.out, angles_svg(angles, svg));
    } else if (fmt == "json") {
        write_output(flags.out, dump(gap_json(gap_statistics(angles))));
    } else {
        throw std::invalid_argument("unsupported format " + fmt + " for spacing");
    }
    if (!svg_path.empty()) write_output(svg_path, angles_svg(angles, svg));
}

void run_quantum_spacing(const GlobalFlags &flags, const Substitution &sigma, const std::string &beta0_text,
                         const std::string &beta1_text, std::size_t count, const SvgOptions &svg,
                         const std::string &svg_path, const std::string &manifest_path) {
    if (!flags.seed) throw std::invalid_argument("measurement-driven spacing requires --seed");
    double b0 = named_constant(beta0_text), b1 = named_constant(beta1_text);
    QuantumSpacingRun run = quantum_spacing_simulate(sigma, b0, b1, count, *flags.seed);
    emit_angles(flags, run.angles, svg, svg_path);
    if (!manifest_path.empty()) {
        nlohmann::ordered_json m = {{"schema", kReportSchema},
                                    {"seed", *flags.seed},
                                    {"count", count},
                                    {"substitution", nlohmann::ordered_json::parse(write_substitution_spec(sigma))},
                                    {"beta0", beta0_text},
                                    {"beta1", beta1_text},
                                    {"zero_rate", run.zero_rate}};
        write_output(manifest_path, dump(m));
    }
}

std::string cantor_alphabet_error(std::size_t size) {
    return "alphabet size must be at least 2, got " + std::to_string(size);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Substitution dynamical systems of Pisot type"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalFlags flags;
    app.add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"json", "csv", "svg", "text"}));
    app.add_option("--precision-bits", flags.precision_bits, "Working precision in bits")->check(CLI::Range(8u, 1u << 20));
    app.add_option("--seed", flags.seed, "Random seed");
    app.add_option("--out", flags.out, "Output path (default stdout)");

    // subst
    auto *subst = app.add_subcommand("subst", "Inspect a substitution");
    subst->require_subcommand(1);
    SubstSource subst_src;
    std::string letter;
    unsigned k = 1;
    std::size_t length = 100;
    bool braced = false;
    std::string mode = "strict";
    auto *subst_show = subst->add_subcommand("show", "Print the canonical spec");
    auto *subst_iterate = subst->add_subcommand("iterate", "Print sigma^k(a)");
    auto *subst_fixpoint = subst->add_subcommand("fixpoint", "Print a fixed-point prefix");
    auto *subst_analyze = subst->add_subcommand("analyze", "Pisot report");
    for (auto *c : {subst_show, subst_iterate, subst_fixpoint, subst_analyze}) add_subst_source(c, subst_src);
    for (auto *c : {subst_iterate, subst_fixpoint}) {
        c->add_option("--letter", letter, "Starting letter (default: first letter)");
        c->add_flag("--braced", braced, "Print as {a,b,...}");
    }
    subst_iterate->add_option("-k,--power", k, "Number of iterations");
    subst_fixpoint->add_option("--length", length, "Prefix length");
    subst_analyze->add_option("--mode", mode, "Pisot mode")->check(CLI::IsMember({"strict", "loose"}));

    // entropy
    auto *entropy = app.add_subcommand("entropy", "Complexity profile CSV");
    SubstSource entropy_src;
    add_subst_source(entropy, entropy_src);
    std::string raw_word;
    std::size_t alphabet_size = 2;
    std::size_t n_max = 10;
    std::size_t prefix_length = 10000;
    std::size_t random_length = 0;
    entropy->add_option("--word", raw_word, "Analyze this word over the digit alphabet");
    entropy->add_option("--alphabet-size", alphabet_size, "Digit alphabet size for --word and --random");
    entropy->add_option("--random", random_length, "Analyze a seeded uniform random word of this length");
    entropy->add_option("--n-max", n_max, "Largest factor length");
    entropy->add_option("--prefix-length", prefix_length, "Fixed-point prefix length");

    // spacing
    auto *spacing = app.add_subcommand("spacing", "Angle runs on the circle");
    spacing->require_subcommand(1);
    std::size_t count = 0;
    std::string svg_path;
    SvgOptions svg;
    auto *sp_roots = spacing->add_subcommand("roots", "n-th roots of unity");
    auto *sp_cusps = spacing->add_subcommand("cusps", "Cusp curve of a PV number");
    auto *sp_drive = spacing->add_subcommand("drive", "Spacing driven by a fixed point");
    auto *sp_quantum = spacing->add_subcommand("quantum", "Measurement-driven spacing");
    std::string poly_text;
    std::string beta0_text = "tau", beta1_text = "1";
    SubstSource spacing_src;
    std::string manifest_path;
    sp_roots->add_option("-n,--n", count, "Number of roots")->required();
    sp_cusps->add_option("--poly", poly_text, "Constant-first coefficients")->required();
    sp_cusps->add_option("--count", count, "Number of cusps")->required();
    for (auto *c : {sp_drive, sp_quantum}) {
        add_subst_source(c, spacing_src);
        c->add_option("--beta0", beta0_text, "Angle for letter 0 (tau, rho, silver, pi or decimal)");
        c->add_option("--beta1", beta1_text, "Angle for letter 1");
        c->add_option("--count", count, "Number of steps")->required();
    }
    sp_quantum->add_option("--manifest", manifest_path, "Write the run manifest JSON here");
    for (auto *c : {sp_roots, sp_cusps, sp_drive, sp_quantum}) {
        c->add_option("--svg", svg_path, "Also write an SVG figure here");
        c->add_option("--svg-size", svg.size, "SVG width and height");
        c->add_option("--stroke-width", svg.stroke_width, "SVG stroke width");
    }

    // pv
    auto *pv = app.add_subcommand("pv", "PV certification of a polynomial");
    std::string pv_poly;
    unsigned long decay_n = 0;
    pv->add_option("--poly", pv_poly, "Constant-first coefficients, e.g. -1,-1,1 for x^2-x-1")->required();
    pv->add_option("--decay", decay_n, "Also print |s_n - lambda^n| for n = 1..N");

    // hiller
    auto *hil = app.add_subcommand("hiller", "Hiller's function");
    std::uint64_t hil_n = 0, hil_table = 0;
    auto *hil_arg = hil->add_option("n", hil_n, "Argument");
    auto *hil_tab = hil->add_option("--table", hil_table, "Print the table for 1..N");
    hil_arg->excludes(hil_tab);
    std::uint64_t allowed_dim = 0;
    hil->add_option("--allowed", allowed_dim, "With --table: list orders allowed in this dimension");

    // cantor
    auto *cantor = app.add_subcommand("cantor", "Value maps and Cantor functions");
    cantor->require_subcommand(1);
    std::size_t cantor_size = 3;
    unsigned excluded = 1;
    std::string cantor_word, q_text;
    std::size_t digits = 10, to_size = 2;
    auto *c_value = cantor->add_subcommand("value", "Cantor function of a word");
    auto *c_dim = cantor->add_subcommand("dim", "Hausdorff dimension");
    auto *c_repr = cantor->add_subcommand("representation", "Nonterminating expansion of q");
    auto *c_trans = cantor->add_subcommand("transition", "Alphabet transition map");
    auto *c_stair = cantor->add_subcommand("staircase", "Cantor staircase at q");
    auto *c_mono = cantor->add_subcommand("monotonicity", "Brute-force monotonicity check");
    for (auto *c : {c_value, c_dim, c_repr, c_trans, c_stair, c_mono}) {
        c->add_option("--alphabet-size", cantor_size, "Size of the digit alphabet A");
    }
    for (auto *c : {c_value, c_dim, c_stair, c_mono}) c->add_option("--excluded", excluded, "Excluded digit");
    c_value->add_option("--word", cantor_word, "Word over A avoiding the excluded digit")->required();
    for (auto *c : {c_repr, c_stair}) c->add_option("--q", q_text, "Rational p/q or decimal")->required();
    for (auto *c : {c_repr, c_trans, c_stair}) c->add_option("--digits", digits, "Number of digits");
    c_trans->add_option("--word", cantor_word, "Source word")->required();
    c_trans->add_option("--to-size", to_size, "Target alphabet size");
    std::size_t mono_len = 6;
    c_mono->add_option("--max-length", mono_len, "Longest word checked");

    // quantum
    auto *quantum = app.add_subcommand("quantum", "Quantum substitution operators");
    quantum->require_subcommand(1);
    SubstSource quantum_src;
    std::vector<std::string> q_words;
    std::size_t q_n = 1;
    auto *q_first = quantum->add_subcommand("first-kind", "Apply sigma-hat k times to an equal superposition");
    auto *q_limit = quantum->add_subcommand("limit", "Second-kind normalized power limit");
    auto *q_sim = quantum->add_subcommand("simulate", "Measurement-driven spacing run");
    auto *q_cplx = quantum->add_subcommand("complexity", "Quantum complexity of a superposition");
    for (auto *c : {q_first, q_limit, q_sim}) add_subst_source(c, quantum_src);
    q_first->add_option("--words", q_words, "Support words (equal amplitudes)")->required();
    q_first->add_option("-k,--power", k, "Number of applications");
    q_limit->add_option("--letter", letter, "Starting letter");
    q_sim->add_option("--beta0", beta0_text, "Angle for letter 0");
    q_sim->add_option("--beta1", beta1_text, "Angle for letter 1");
    q_sim->add_option("--count", count, "Number of steps")->required();
    q_sim->add_option("--manifest", manifest_path, "Write the run manifest JSON here");
    q_sim->add_option("--svg", svg_path, "Also write an SVG figure here");
    q_cplx->add_option("--words", q_words, "Support words (equal amplitudes)");
    q_cplx->add_option("--symmetric", q_n, "Use the symmetric state of this length");
    q_cplx->add_option("--alphabet-size", alphabet_size, "Digit alphabet size");
    std::size_t cplx_n = 1;
    q_cplx->add_option("-n,--n", cplx_n, "Factor length");

    CLI11_PARSE(app, argc, argv);

    try {
        std::string fmt = flags.format;
        if (subst->parsed()) {
            Substitution sigma = load_substitution(subst_src);
            if (subst_show->parsed()) {
                write_output(flags.out, write_substitution_spec(sigma));
            } else if (subst_iterate->parsed()) {
                Word w = iterate(sigma, letter_of(sigma, letter), k);
                write_output(flags.out, (braced ? w.braced() : w.str()) + "\n");
            } else if (subst_fixpoint->parsed()) {
                Letter a = letter_of(sigma, letter);
                try {
                    Word w = fixed_point_prefix(sigma, a, length);
                    write_output(flags.out, (braced ? w.braced() : w.str()) + "\n");
                } catch (const FixedPointError &e) {
                    std::cerr << "error: " << e.what();
                    if (e.suggested_power()) std::cerr << " (suggested power: " << *e.suggested_power() << ")";
                    std::cerr << "\n";
                    return 2;
                }
            } else {
                PisotReport r = classify_pisot(sigma, mode == "loose" ? PisotMode::loose : PisotMode::strict,
                                               flags.precision_bits);
                write_output(flags.out, dump(pisot_report_json(sigma, r)));
            }
        } else if (entropy->parsed()) {
            if (n_max < 1) throw std::invalid_argument("--n-max must be positive");
            Word prefix;
            int sources = !raw_word.empty() + (random_length > 0) + (!entropy_src.spec.empty() || !entropy_src.name.empty());
            if (sources != 1) throw std::invalid_argument("give exactly one of --word, --random, --spec/--name");
            if (!raw_word.empty()) {
                prefix = Word::parse(digit_alphabet(alphabet_size), raw_word);
            } else if (random_length > 0) {
                if (!flags.seed) throw std::invalid_argument("--random requires --seed");
                std::mt19937_64 rng(*flags.seed);
                std::vector<Letter> letters(random_length);
                for (auto &l : letters) l = static_cast<Letter>(rng() % alphabet_size);
                prefix = Word(digit_alphabet(alphabet_size), std::move(letters));
            } else {
                Substitution sigma = load_substitution(entropy_src);
                if (prefix_length < n_max) throw std::invalid_argument("--prefix-length must be at least --n-max");
                auto p = fixed_point_power(sigma, 0);
                if (!p) throw std::invalid_argument("letter 0 has no fixed point for any small power");
                prefix = fixed_point_prefix(sigma.power(*p), 0, prefix_length);
            }
            if (prefix.size() < n_max) throw std::invalid_argument("prefix shorter than --n-max");
            write_output(flags.out, profile_csv(complexity_profile(prefix, n_max)));
        } else if (spacing->parsed()) {
            if (sp_roots->parsed()) {
                AngleList a = roots_of_unity(count);
                svg.polyline = false;
                emit_angles(flags, a, svg, svg_path);
            } else if (sp_cusps->parsed()) {
                AngleList a = cusp_curve(IntPolynomial::parse(poly_text), count, flags.precision_bits);
                svg.petals = false;
                svg.polyline = true;
                emit_angles(flags, a, svg, svg_path);
            } else {
                Substitution sigma = load_substitution(spacing_src);
                double b0 = named_constant(beta0_text), b1 = named_constant(beta1_text);
                if (sp_drive->parsed()) {
                    emit_angles(flags, substitution_spacing(sigma, b0, b1, count), svg, svg_path);
                } else {
                    run_quantum_spacing(flags, sigma, beta0_text, beta1_text, count, svg, svg_path, manifest_path);
                }
            }
        } else if (pv->parsed()) {
            IntPolynomial p = IntPolynomial::parse(pv_poly);
            PvCertificate cert = certify_pv(p);
            nlohmann::ordered_json j = pv_certificate_json(p, cert);
            std::vector<Interval> decays;
            if (decay_n > 0 && cert.verdict != PvVerdict::not_pv) {
                nlohmann::ordered_json d = nlohmann::ordered_json::array();
                for (unsigned long n = 1; n <= decay_n; ++n) {
                    decays.push_back(pv_decay(p, n, flags.precision_bits));
                    d.push_back(interval_json(decays.back()));
                }
                j["decay"] = d;
            }
            if (fmt == "json") {
                write_output(flags.out, dump(j));
            } else {
                std::ostringstream s;
                s << "poly: " << p.to_string() << "\n";
                s << "PV: " << (cert.verdict == PvVerdict::pv ? "true" : "false") << "\n";
                s << "verdict: " << to_string(cert.verdict) << "\n";
                s << "irreducible: " << to_string(cert.irreducible) << "\n";
                s << "roots: inside " << cert.counts.inside << ", on circle " << cert.counts.on_circle
                  << ", outside " << cert.counts.outside << "\n";
                if (!cert.reason.empty()) s << "reason: " << cert.reason << "\n";
                for (std::size_t n = 0; n < decays.size(); ++n) {
                    s << "decay " << n + 1 << ": " << format_angle(decays[n].mid_d()) << "\n";
                }
                write_output(flags.out, s.str());
            }
        } else if (hil->parsed()) {
            if (hil_table > 0) {
                std::string s = "n & Hil(n)\n";
                for (std::uint64_t n = 1; n <= hil_table; ++n) {
                    s += std::to_string(n) + " & " + std::to_string(hiller(n)) + "\n";
                }
                if (allowed_dim > 0) {
                    s += "allowed(" + std::to_string(allowed_dim) + "):";
                    for (auto n : allowed_orders(allowed_dim, hil_table)) s += " " + std::to_string(n);
                    s += "\n";
                }
                write_output(flags.out, s);
            } else if (hil_arg->count() > 0) {
                write_output(flags.out, std::to_string(hiller(hil_n)) + "\n");
            } else {
                throw std::invalid_argument("hiller needs n or --table N");
            }
        } else if (cantor->parsed()) {
            if (cantor_size < 2) throw std::invalid_argument(cantor_alphabet_error(cantor_size));
            AlphabetRef alphabet = digit_alphabet(cantor_size);
            if (c_value->parsed()) {
                CantorSpec spec(alphabet, excluded);
                write_output(flags.out,
                             rational_string(cantor_function_value(spec, parse_word_or_throw(alphabet, cantor_word))) +
                                 "\n");
            } else if (c_dim->parsed()) {
                Interval d = hausdorff_dimension(CantorSpec(alphabet, excluded), flags.precision_bits);
                if (fmt == "json") {
                    nlohmann::ordered_json j = interval_json(d);
                    j["schema"] = kReportSchema;
                    write_output(flags.out, dump(j));
                } else {
                    char buf[64];
                    std::snprintf(buf, sizeof(buf), "%.15g", d.mid_d());
                    write_output(flags.out, std::string(buf) + "\n");
                }
            } else if (c_repr->parsed()) {
                write_output(flags.out, representation(alphabet, parse_rational(q_text), digits).str() + "\n");
            } else if (c_trans->parsed()) {
                if (to_size < 2) throw std::invalid_argument(cantor_alphabet_error(to_size));
                TransitionResult t =
                    alphabet_transition(digit_alphabet(to_size), parse_word_or_throw(alphabet, cantor_word), digits);
                write_output(flags.out, t.word.str() + "\n");
            } else if (c_stair->parsed()) {
                StaircaseValue v = cantor_staircase(CantorSpec(alphabet, excluded), parse_rational(q_text), digits);
                write_output(flags.out, rational_string(v.value) + " +" + rational_string(v.error_bound) + "\n");
            } else {
                MonotonicityReport r = check_cantor_monotonicity(CantorSpec(alphabet, excluded), mono_len);
                write_output(flags.out, std::string("monotone: ") + (r.monotone ? "true" : "false") +
                                            "\nwords: " + std::to_string(r.words_checked) +
                                            "\nplateaus: " + std::to_string(r.plateaus) + "\n");
                if (!r.monotone) return 1;
            }
        } else if (quantum->parsed()) {
            if (q_cplx->parsed()) {
                AlphabetRef alphabet = digit_alphabet(alphabet_size);
                QuantumState psi;
                if (!q_words.empty()) {
                    std::map<Word, Amplitude> amps;
                    double a = 1.0 / std::sqrt(static_cast<double>(q_words.size()));
                    for (const auto &w : q_words) amps[parse_word_or_throw(alphabet, w)] += a;
                    psi = QuantumState(std::move(amps));
                } else {
                    psi = symmetric_state(alphabet, q_n);
                }
                nlohmann::ordered_json j = {{"schema", kReportSchema},
                                    {"n", cplx_n},
                                    {"complexity", quantum_complexity(psi, cplx_n)},
                                    {"entropy_estimate", quantum_entropy_estimate(psi, cplx_n)}};
                write_output(flags.out, dump(j));
            } else {
                Substitution sigma = load_substitution(quantum_src);
                if (q_first->parsed()) {
                    std::map<Word, Amplitude> amps;
                    double a = 1.0 / std::sqrt(static_cast<double>(q_words.size()));
                    for (const auto &w : q_words) amps[parse_word_or_throw(sigma.alphabet(), w)] += a;
                    QuantumState psi(std::move(amps));
                    bool non_isometric = false;
                    for (unsigned i = 0; i < k; ++i) {
                        FirstKindResult r = apply_first_kind(sigma, psi);
                        psi = r.state;
                        non_isometric = non_isometric || r.non_isometric;
                    }
                    if (fmt == "json") {
                        nlohmann::ordered_json j = {{"schema", kReportSchema},
                                            {"non_isometric", non_isometric},
                                            {"state", quantum_state_json(psi)}};
                        write_output(flags.out, dump(j));
                    } else {
                        write_output(flags.out, quantum_state_csv(psi));
                    }
                } else if (q_limit->parsed()) {
                    SecondKindLimit lim =
                        second_kind_limit(incidence_matrix(sigma), letter_of(sigma, letter));
                    nlohmann::ordered_json probs = nlohmann::ordered_json::array();
                    for (std::size_t i = 0; i < lim.probabilities.size(); ++i) {
                        probs.push_back({{"letter", sigma.alphabet()->symbol(static_cast<Letter>(i))},
                                         {"probability", lim.probabilities[i]},
                                         {"exact", interval_json(lim.exact_probabilities[i])}});
                    }
                    nlohmann::ordered_json j = {{"schema", kReportSchema},
                                        {"iterations", lim.iterations},
                                        {"converged", lim.converged},
                                        {"vector", lim.vector},
                                        {"probabilities", probs}};
                    write_output(flags.out, dump(j));
                } else {
                    run_quantum_spacing(flags, sigma, beta0_text, beta1_text, count, svg, svg_path, manifest_path);
                }
            }
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
