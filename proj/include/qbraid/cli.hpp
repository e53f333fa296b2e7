#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qbraid/serialize.hpp"

namespace qbraid::cli {

enum Exit { Ok = 0, VerificationFailed = 1, UsageError = 2, RuntimeError = 3 };

inline constexpr double kDefaultTol = 1e-9;
inline constexpr int kSchemaVersion = 1;

// "symbolic", "rootofunity:k" (q = e^{2 pi i/k}), "re,im", "a/b" or a decimal
struct QValue {
    bool symbolic = false;
    Complex value{1.0, 0.0};
    std::string text;
};

QValue parse_q(const std::string& text);

// text rendering of a report: one "path: value" line per leaf, matrices summarized
std::string render_text(const Json& report);

// args excludes the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qbraid::cli
