#include "pisot/io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace pisot {

namespace {

std::string fixed(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, x);
    std::string s = buf;
    if (s == "-0.000000" || s == "-0.000") s.erase(0, 1);
    return s;
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

Substitution parse_substitution_spec(std::string_view text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::ordered_json::parse_error &e) {
        throw std::invalid_argument(std::string("malformed substitution spec: ") + e.what());
    }
    if (!j.is_object()) {
        throw std::invalid_argument("substitution spec must be an object");
    }
    for (const auto &[key, value] : j.items()) {
        if (key != "alphabet" && key != "rules") {
            throw std::invalid_argument("unknown key in substitution spec: " + key);
        }
    }
    if (!j.contains("alphabet") || !j["alphabet"].is_array()) {
        throw std::invalid_argument("substitution spec needs an \"alphabet\" array");
    }
    if (!j.contains("rules") || !j["rules"].is_object()) {
        throw std::invalid_argument("substitution spec needs a \"rules\" object");
    }
    std::vector<std::string> symbols;
    for (const auto &s : j["alphabet"]) {
        if (!s.is_string()) {
            throw std::invalid_argument("alphabet symbols must be strings");
        }
        symbols.push_back(s.get<std::string>());
    }
    AlphabetRef alphabet = make_alphabet(std::move(symbols));
    const auto &rules_json = j["rules"];
    std::vector<std::vector<Letter>> rules;
    for (const auto &symbol : alphabet->symbols()) {
        auto it = rules_json.find(symbol);
        if (it == rules_json.end()) {
            throw std::invalid_argument("missing rule for letter " + symbol);
        }
        if (!it->is_string()) {
            throw std::invalid_argument("rule for letter " + symbol + " must be a string");
        }
        Word image = Word::parse(alphabet, it->get<std::string>());
        if (image.empty()) {
            throw std::invalid_argument("empty rule for letter " + symbol);
        }
        rules.push_back(image.letters());
    }
    for (const auto &[key, value] : rules_json.items()) {
        if (!alphabet->index_of(key)) {
            throw std::invalid_argument("rule for unknown letter " + key);
        }
    }
    return Substitution(alphabet, std::move(rules));
}

Substitution read_substitution_spec(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open substitution spec " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_substitution_spec(buffer.str());
}

std::string write_substitution_spec(const Substitution &sigma) {
    const auto &symbols = sigma.alphabet()->symbols();
    std::string out = "{\"alphabet\": [";
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (i) out += ", ";
        out += nlohmann::ordered_json(symbols[i]).dump();
    }
    out += "], \"rules\": {";
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (i) out += ", ";
        out += nlohmann::ordered_json(symbols[i]).dump();
        out += ": ";
        out += nlohmann::ordered_json(sigma.image(static_cast<Letter>(i)).str()).dump();
    }
    out += "}}\n";
    return out;
}

std::string rational_string(Rational q) {
    q.canonicalize();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string format_angle(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

nlohmann::ordered_json interval_json(const Interval &x) {
    return {{"lower", rational_string(x.lower())},
            {"upper", rational_string(x.upper())},
            {"approx", format_angle(x.mid_d())}};
}

nlohmann::ordered_json polynomial_json(const IntPolynomial &p) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const auto &c : p.coefficients()) {
        if (c.fits_slong_p()) {
            coeffs.push_back(c.get_si());
        } else {
            coeffs.push_back(c.get_str());
        }
    }
    return coeffs;
}

nlohmann::ordered_json root_count_json(const RootCount &c) {
    return {{"inside", c.inside}, {"on_circle", c.on_circle}, {"outside", c.outside}};
}

nlohmann::ordered_json pisot_report_json(const Substitution &sigma, const PisotReport &report) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["substitution"] = nlohmann::ordered_json::parse(write_substitution_spec(sigma));
    j["primitive"] = report.primitive;
    j["char_poly"] = polynomial_json(report.char_poly);
    j["leading_eigenvalue"] = interval_json(report.leading_eigenvalue);
    j["conjugate_moduli_bound"] = interval_json(report.conjugate_moduli_bound);
    j["root_counts"] = root_count_json(report.root_counts);
    j["irreducible"] = report.irreducible ? nlohmann::ordered_json(*report.irreducible) : nlohmann::ordered_json(nullptr);
    j["pisot_loose"] = report.pisot_loose;
    j["pisot_strict"] = report.pisot_strict;
    j["pisot"] = report.pisot;
    nlohmann::ordered_json freqs = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < report.frequencies.size(); ++i) {
        nlohmann::ordered_json f = interval_json(report.frequencies[i]);
        f["letter"] = sigma.alphabet()->symbol(static_cast<Letter>(i));
        freqs.push_back(std::move(f));
    }
    j["frequencies"] = std::move(freqs);
    if (report.frequency_crosscheck_error >= 0) {
        j["frequency_crosscheck_error"] = report.frequency_crosscheck_error;
    }
    return j;
}

nlohmann::ordered_json pv_certificate_json(const IntPolynomial &p, const PvCertificate &cert) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["poly"] = polynomial_json(p);
    j["verdict"] = to_string(cert.verdict);
    j["pv"] = cert.verdict == PvVerdict::pv;
    j["irreducible"] = to_string(cert.irreducible);
    j["root_counts"] = root_count_json(cert.counts);
    if (!cert.reason.empty()) j["reason"] = cert.reason;
    return j;
}

std::string profile_csv(const ComplexityProfile &profile) {
    std::string out = "n,p_n,estimate,sturmian\n";
    for (std::size_t n = 1; n <= profile.max_n(); ++n) {
        std::uint64_t p = profile.at(n);
        EntropyEstimate e = entropy_from_count(p, profile.alphabet_size, n, profile.prefix_length);
        out += std::to_string(n) + "," + std::to_string(p) + "," + format_angle(e.value) + "," +
               (p == n + 1 ? "1" : "0") + "\n";
    }
    return out;
}

std::string angles_csv(const AngleList &angles) {
    std::string out = "k,theta,x,y\n";
    for (std::size_t k = 0; k < angles.size(); ++k) {
        double t = angles[k];
        out += std::to_string(k + 1) + "," + format_angle(t) + "," + format_angle(std::cos(t)) + "," +
               format_angle(std::sin(t)) + "\n";
    }
    return out;
}

std::string angles_svg(const AngleList &angles, const SvgOptions &options) {
    if (options.size <= 0) {
        throw std::invalid_argument("SVG size must be positive");
    }
    double half = options.size / 2.0;
    double radius = half * 0.9;
    auto px = [&](double t) { return fixed(half + radius * std::cos(t), 3); };
    auto py = [&](double t) { return fixed(half - radius * std::sin(t), 3); };
    std::string sw = fixed(options.stroke_width, 3);
    std::string size = std::to_string(options.size);
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + size + "\" height=\"" + size + "\" viewBox=\"0 0 " +
           size + " " + size + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<circle cx=\"" + fixed(half, 3) + "\" cy=\"" + fixed(half, 3) + "\" r=\"" + fixed(radius, 3) +
           "\" fill=\"none\" stroke=\"black\" stroke-width=\"" + sw + "\"/>\n";
    if (options.petals) {
        out += "<g stroke=\"#1f4e9c\" stroke-width=\"" + sw + "\">\n";
        for (std::size_t k = 0; k < angles.size(); ++k) {
            out += "<line x1=\"" + fixed(half, 3) + "\" y1=\"" + fixed(half, 3) + "\" x2=\"" + px(angles[k]) +
                   "\" y2=\"" + py(angles[k]) + "\"/>\n";
        }
        out += "</g>\n";
    }
    if (options.polyline && angles.size() > 0) {
        out += "<polyline fill=\"none\" stroke=\"#b22222\" stroke-width=\"" + sw + "\" points=\"";
        for (std::size_t k = 0; k < angles.size(); ++k) {
            if (k) out += " ";
            out += px(angles[k]) + "," + py(angles[k]);
        }
        out += "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string quantum_state_csv(const QuantumState &psi) {
    std::string out = "word,re,im\n";
    for (const auto &[w, a] : psi.amplitudes()) {
        out += csv_field(w.str()) + "," + format_angle(a.real()) + "," + format_angle(a.imag()) + "\n";
    }
    return out;
}

nlohmann::ordered_json quantum_state_json(const QuantumState &psi) {
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const auto &[w, a] : psi.amplitudes()) {
        records.push_back({{"word", w.str()}, {"re", a.real()}, {"im", a.imag()}});
    }
    return records;
}

void write_output(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << text;
}

}  // namespace pisot
