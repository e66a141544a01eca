#ifndef PISOT_IO_H
#define PISOT_IO_H

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "pisot/algebraic.h"
#include "pisot/interval.h"
#include "pisot/quantum.h"
#include "pisot/spacing.h"
#include "pisot/substitution.h"
#include "pisot/words.h"

namespace pisot {

/// Version tag written as "schema" into every JSON report.
inline constexpr int kReportSchema = 1;

/// Parses `{"alphabet": [...], "rules": {...}}`. Every letter needs exactly
/// one nonempty rule over the alphabet; unknown keys are rejected. Throws
/// std::invalid_argument with a description of the first violation.
Substitution parse_substitution_spec(std::string_view text);
Substitution read_substitution_spec(const std::string &path);

/// Canonical spec text: rules listed in alphabet order, one trailing newline.
/// parse_substitution_spec(write_substitution_spec(s)) == s, and writing the
/// result again reproduces the same bytes.
std::string write_substitution_spec(const Substitution &sigma);

/// "p/q", or "p" when q = 1.
std::string rational_string(Rational q);
/// 12 significant digits, locale independent.
std::string format_angle(double x);

nlohmann::ordered_json interval_json(const Interval &x);
nlohmann::ordered_json polynomial_json(const IntPolynomial &p);
nlohmann::ordered_json root_count_json(const RootCount &c);
nlohmann::ordered_json pisot_report_json(const Substitution &sigma, const PisotReport &report);
nlohmann::ordered_json pv_certificate_json(const IntPolynomial &p, const PvCertificate &cert);

/// Columns n, p_n, estimate, sturmian (p_n == n + 1).
std::string profile_csv(const ComplexityProfile &profile);

/// Columns k, theta, x, y with k starting at 1.
std::string angles_csv(const AngleList &angles);

struct SvgOptions {
    int size = 512;
    double stroke_width = 1.0;
    /// Radial segments from the centre to each point.
    bool petals = true;
    /// Polyline through the points in order.
    bool polyline = false;
};

/// Self-contained SVG of the unit circle with the points e^{i theta_k}.
std::string angles_svg(const AngleList &angles, const SvgOptions &options = {});

/// Columns word, re, im in basis order.
std::string quantum_state_csv(const QuantumState &psi);
nlohmann::ordered_json quantum_state_json(const QuantumState &psi);

/// Writes `text` to `path`, or to stdout when path is empty or "-".
void write_output(const std::string &path, const std::string &text);

}  // namespace pisot

#endif
