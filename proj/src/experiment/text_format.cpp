#include "qcount/errors.hpp"
#include "qcount/experiment.hpp"

#include <fmt/format.h>

#include <string>

namespace qcount::experiment {

std::string_view to_string(Algorithm a) { return a == Algorithm::Simple ? "simple" : "pea"; }

std::string_view to_string(Engine e) { return e == Engine::Analytic ? "analytic" : "statevector"; }

Algorithm parse_algorithm(std::string_view s) {
    if (s == "simple") return Algorithm::Simple;
    if (s == "pea") return Algorithm::Pea;
    throw DomainError("unknown algorithm '" + std::string(s) + "' (expected simple or pea)");
}

Engine parse_engine(std::string_view s) {
    if (s == "analytic") return Engine::Analytic;
    if (s == "statevector") return Engine::Statevector;
    throw DomainError("unknown engine '" + std::string(s) + "' (expected analytic or statevector)");
}

std::string format_double(double v) {
    if (v == 0.0) v = 0.0; // drop the sign of -0
    return fmt::format("{:.12g}", v);
}

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace qcount::experiment
