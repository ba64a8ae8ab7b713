// Copyright 2026 The qdiner Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdiner/qasm.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <regex>
#include <sstream>
#include <vector>

#include "qdiner/errors.hpp"

namespace qdiner::qasm {

namespace {

using circuit::Circuit;
using circuit::CnotGate;
using circuit::CzGate;
using circuit::MeasureGate;
using circuit::U3Gate;

constexpr int kMaxNumerator = 8;
constexpr int kDenominators[] = {1, 2, 4};

double multiple_of_pi(int numerator, int denominator) { return (numerator * std::numbers::pi) / denominator; }

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::size_t index_from(const std::string &digits, std::size_t line) {
    const unsigned long v = std::stoul(digits);
    if (v >= circuit::kCircuitQubits) throw ParseError("index " + digits + " outside q[4]/c[4]", line);
    return static_cast<std::size_t>(v);
}

}  // namespace

std::string format_angle(double radians) {
    if (radians == 0.0) return "0";
    for (int d : kDenominators) {
        for (int n = -kMaxNumerator; n <= kMaxNumerator; ++n) {
            if (n == 0 || multiple_of_pi(n, d) != radians) continue;
            std::string out = n < 0 ? "-" : "";
            const int mag = std::abs(n);
            if (mag != 1) out += std::to_string(mag) + "*";
            out += "pi";
            if (d != 1) out += "/" + std::to_string(d);
            return out;
        }
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", radians);
    return buf;
}

double parse_angle(std::string_view text) {
    static const std::regex symbolic(R"(^(-)?(?:(\d+)\*)?pi(?:/(\d+))?$)");
    const std::string s = trim(text);
    std::smatch m;
    if (std::regex_match(s, m, symbolic)) {
        int n = m[2].matched ? std::stoi(m[2].str()) : 1;
        if (m[1].matched) n = -n;
        const int d = m[3].matched ? std::stoi(m[3].str()) : 1;
        if (d == 0) throw ParseError("division by zero in angle '" + s + "'");
        return multiple_of_pi(n, d);
    }
    if (s.empty()) throw ParseError("empty angle");
    char *end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || !std::isfinite(v)) throw ParseError("bad angle '" + s + "'");
    return v;
}

std::string export_qasm(const Circuit &c) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n"
        << "include \"qelib1.inc\";\n"
        << "qreg q[4];\n"
        << "creg c[4];\n";
    for (const auto &gate : c.gates()) {
        if (const auto *g = std::get_if<U3Gate>(&gate)) {
            out << "u3(" << format_angle(g->theta) << "," << format_angle(g->phi) << "," << format_angle(g->lambda)
                << ") q[" << g->target << "];\n";
        } else if (const auto *g = std::get_if<CzGate>(&gate)) {
            out << "cz q[" << g->a << "],q[" << g->b << "];\n";
        } else if (const auto *g = std::get_if<CnotGate>(&gate)) {
            out << "cx q[" << g->control << "],q[" << g->target << "];\n";
        } else if (const auto *g = std::get_if<MeasureGate>(&gate)) {
            out << "measure q[" << g->qubit << "] -> c[" << g->cbit << "];\n";
        }
    }
    return out.str();
}

Circuit import_qasm(std::string_view text) {
    static const std::regex qreg_re(R"(^qreg\s+q\s*\[\s*4\s*\]\s*;$)");
    static const std::regex creg_re(R"(^creg\s+c\s*\[\s*4\s*\]\s*;$)");
    static const std::regex include_re(R"(^include\s+"qelib1\.inc"\s*;$)");
    static const std::regex u3_re(R"(^u3\s*\(([^,()]+),([^,()]+),([^,()]+)\)\s*q\s*\[\s*(\d+)\s*\]\s*;$)");
    static const std::regex two_re(R"(^(cz|cx)\s+q\s*\[\s*(\d+)\s*\]\s*,\s*q\s*\[\s*(\d+)\s*\]\s*;$)");
    static const std::regex measure_re(R"(^measure\s+q\s*\[\s*(\d+)\s*\]\s*->\s*c\s*\[\s*(\d+)\s*\]\s*;$)");
    static const std::regex name_re(R"(^([A-Za-z_][A-Za-z0-9_]*))");

    Circuit c;
    bool seen_header = false;
    bool seen_qreg = false;
    bool seen_creg = false;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto pos = line.find("//"); pos != std::string::npos) line.erase(pos);
        line = trim(line);
        if (line.empty()) continue;

        if (!seen_header) {
            if (line != "OPENQASM 2.0;") throw ParseError("expected 'OPENQASM 2.0;' header", line_no);
            seen_header = true;
            continue;
        }
        std::smatch m;
        try {
            if (std::regex_match(line, include_re)) continue;
            if (std::regex_match(line, qreg_re)) {
                if (seen_qreg) throw ParseError("duplicate qreg", line_no);
                seen_qreg = true;
                continue;
            }
            if (std::regex_match(line, creg_re)) {
                if (seen_creg) throw ParseError("duplicate creg", line_no);
                seen_creg = true;
                continue;
            }
            if (std::regex_match(line, m, u3_re)) {
                if (!seen_qreg) throw ParseError("gate before 'qreg q[4];'", line_no);
                c.append(U3Gate{parse_angle(m[1].str()), parse_angle(m[2].str()), parse_angle(m[3].str()),
                                index_from(m[4].str(), line_no)});
                continue;
            }
            if (std::regex_match(line, m, two_re)) {
                if (!seen_qreg) throw ParseError("gate before 'qreg q[4];'", line_no);
                const std::size_t a = index_from(m[2].str(), line_no);
                const std::size_t b = index_from(m[3].str(), line_no);
                if (m[1].str() == "cz") {
                    c.append(CzGate{a, b});
                } else {
                    c.append(CnotGate{a, b});
                }
                continue;
            }
            if (std::regex_match(line, m, measure_re)) {
                if (!seen_qreg || !seen_creg) throw ParseError("measure before qreg/creg declarations", line_no);
                c.append(MeasureGate{index_from(m[1].str(), line_no), index_from(m[2].str(), line_no)});
                continue;
            }
        } catch (const ParseError &e) {
            if (e.line() != 0) throw;
            throw ParseError(e.what(), line_no);
        } catch (const std::exception &e) {
            throw ParseError(e.what(), line_no);
        }
        if (std::regex_search(line, m, name_re)) {
            const std::string name = m[1].str();
            if (name == "u3" || name == "cz" || name == "cx" || name == "measure" || name == "qreg" ||
                name == "creg" || name == "include") {
                throw ParseError("malformed '" + name + "' statement", line_no);
            }
            throw ParseError("unsupported gate '" + name + "'", line_no);
        }
        throw ParseError("syntax error", line_no);
    }
    if (!seen_header) throw ParseError("expected 'OPENQASM 2.0;' header", 1);
    return c;
}

}  // namespace qdiner::qasm
