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

#include "qdiner/cli.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qdiner/circuit.hpp"
#include "qdiner/errors.hpp"
#include "qdiner/ewl.hpp"
#include "qdiner/payoff.hpp"
#include "qdiner/qasm.hpp"

namespace qdiner::cli {

namespace {

using json = nlohmann::ordered_json;

// Machine formats: shortest round-trip representation.
std::string full(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, end);
}

// Human-readable output: 4 decimal places.
std::string fixed4(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.insert(0, width - s.size(), ' ');
    return s;
}

std::string profile_text(const StrategyProfile &p) {
    std::string out;
    for (std::size_t i = 0; i < kNumPlayers; ++i) {
        if (i) out += ",";
        out += p[i].to_string();
    }
    return out;
}

json payoff_json(const PayoffVector &pf) {
    json out = json::object();
    for (Player p : kAllPlayers) out[std::string(player_name(p))] = pf[index_of(p)];
    return out;
}

json distribution_json(const OutcomeDistribution &d) {
    json out = json::object();
    for (Outcome k = 0; k < kNumOutcomes; ++k) out[outcome_label(k)] = d[k];
    return out;
}

std::string csv_header(bool with_counts) {
    std::string h = "profile";
    for (Outcome k = 0; k < kNumOutcomes; ++k) h += ",p" + outcome_label(k);
    if (with_counts) {
        for (Outcome k = 0; k < kNumOutcomes; ++k) h += ",n" + outcome_label(k);
    }
    for (Player p : kAllPlayers) {
        std::string name(player_name(p));
        for (auto &ch : name) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        h += ",payoff_" + name;
    }
    return h + "\n";
}

std::string csv_field(const std::string &text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char ch : text) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}

std::string csv_row(const std::string &profile, const OutcomeDistribution &d, const PayoffVector &pf,
                    const circuit::Histogram *counts = nullptr) {
    std::string row = csv_field(profile);
    for (Outcome k = 0; k < kNumOutcomes; ++k) row += "," + full(d[k]);
    if (counts) {
        for (auto n : *counts) row += "," + std::to_string(n);
    }
    for (double v : pf) row += "," + full(v);
    return row + "\n";
}

std::string payoff_line(const PayoffVector &pf) {
    std::string out = "payoffs:";
    for (Player p : kAllPlayers) out += " " + std::string(player_name(p)) + "=" + fixed4(pf[index_of(p)]);
    return out + "\n";
}

OutcomeDistribution classical_distribution(const StrategyProfile &profile) {
    Outcome k = 0;
    for (const auto &s : profile) {
        const auto move = s.move();
        if (!move || *move == Move::A) {
            throw UsageError("classical model accepts only C or E, got '" + s.to_string() + "'");
        }
        k = static_cast<Outcome>((k << 1) | (*move == Move::E ? 1 : 0));
    }
    return OutcomeDistribution::point_mass(k);
}

NamedProfile named_only(const StrategyProfile &profile) {
    NamedProfile out{};
    for (std::size_t i = 0; i < kNumPlayers; ++i) {
        const auto move = profile[i].move();
        if (!move) throw UsageError("analysis needs named moves, got '" + profile[i].to_string() + "'");
        out[i] = *move;
    }
    return out;
}

std::string moves_text(const std::vector<Move> &moves) {
    std::string out;
    for (Move m : moves) out.push_back(move_letter(m));
    return out;
}

std::string opponents_text(const Opponents &opp) {
    std::string out;
    for (Move m : opp) out.push_back(move_letter(m));
    return out;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("error reading '" + path + "'");
    return buf.str();
}

}  // namespace

Format parse_format(std::string_view text) {
    if (text == "text") return Format::Text;
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    throw UsageError("unknown format '" + std::string(text) + "'");
}

StrategyProfile parse_profile(std::string_view text) {
    std::vector<Strategy> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string token(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
        if (token.size() == 1 && (token[0] == 'C' || token[0] == 'E' || token[0] == 'A')) {
            out.push_back(Strategy::named(parse_move(token[0])));
        } else {
            // theta=<t>:phi=<p>
            const std::string_view t(token);
            const auto colon = t.find(':');
            if (colon == t.npos || !t.starts_with("theta=") || t.substr(colon + 1, 4) != "phi=") {
                throw UsageError("bad strategy token '" + token + "'");
            }
            auto number = [&](std::string_view text) {
                double v = 0.0;
                auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
                if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
                    throw UsageError("bad strategy token '" + token + "'");
                }
                return v;
            };
            const double theta = number(t.substr(6, colon - 6));
            const double phi = number(t.substr(colon + 5));
            try {
                out.push_back(Strategy::parametric(theta, phi));
            } catch (const DomainError &e) {
                throw UsageError("bad strategy token '" + token + "': " + e.what());
            }
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (out.size() != kNumPlayers) {
        throw UsageError("profile '" + std::string(text) + "' needs 4 strategies, got " + std::to_string(out.size()));
    }
    return {out[0], out[1], out[2], out[3]};
}

Opponents parse_opponents(std::string_view letters) {
    if (letters.size() != kNumPlayers - 1) throw UsageError("--others needs 3 letters, got '" + std::string(letters) + "'");
    Opponents out{};
    for (std::size_t i = 0; i < out.size(); ++i) {
        try {
            out[i] = parse_move(letters[i]);
        } catch (const DomainError &) {
            throw UsageError(std::string("bad opponent move '") + letters[i] + "'");
        }
    }
    return out;
}

PayoffTable load_payoffs(const RunConfig &cfg) {
    if (!cfg.payoff_path) return PayoffTable::builtin();
    return load_table(read_file(*cfg.payoff_path));
}

std::string run_simulate(const RunConfig &cfg) {
    if (!cfg.profile) throw UsageError("simulate requires --profile");
    if (cfg.shots && !cfg.seed) throw UsageError("--shots requires --seed");
    const PayoffTable table = load_payoffs(cfg);
    const StrategyProfile &profile = *cfg.profile;
    const OutcomeDistribution dist =
        cfg.model == Model::Classical ? classical_distribution(profile) : ewl::outcome_distribution(profile);
    const PayoffVector pf = expected_payoffs(dist, table);
    std::optional<circuit::Histogram> counts;
    if (cfg.shots) counts = circuit::sample(dist, *cfg.shots, *cfg.seed);

    switch (cfg.format) {
        case Format::Json: {
            json out;
            out["model"] = model_name(cfg.model);
            out["profile"] = profile_text(profile);
            out["distribution"] = distribution_json(dist);
            if (counts) {
                out["shots"] = *cfg.shots;
                out["seed"] = *cfg.seed;
                json c = json::object();
                for (Outcome k = 0; k < kNumOutcomes; ++k) c[outcome_label(k)] = (*counts)[k];
                out["counts"] = c;
            }
            out["payoffs"] = payoff_json(pf);
            return out.dump(2) + "\n";
        }
        case Format::Csv:
            return csv_header(counts.has_value()) +
                   csv_row(profile_text(profile), dist, pf, counts ? &*counts : nullptr);
        case Format::Text: {
            std::string out = "model: " + std::string(model_name(cfg.model)) + "\nprofile: " + profile_text(profile) + "\n";
            out += counts ? "outcome  probability   counts\n" : "outcome  probability\n";
            for (Outcome k = 0; k < kNumOutcomes; ++k) {
                out += outcome_label(k) + "     " + fixed4(dist[k]);
                if (counts) out += pad(std::to_string((*counts)[k]), 11);
                out += "\n";
            }
            if (counts) out += "shots: " + std::to_string(*cfg.shots) + " seed: " + std::to_string(*cfg.seed) + "\n";
            return out + payoff_line(pf);
        }
    }
    return {};
}

std::string run_table(const RunConfig &cfg) {
    const auto records = enumerate_table(cfg.model, load_payoffs(cfg));
    switch (cfg.format) {
        case Format::Json: {
            json rows = json::array();
            for (const auto &r : records) {
                json row;
                row["profile"] = profile_letters(r.profile);
                row["probabilities"] = distribution_json(r.distribution);
                row["payoffs"] = payoff_json(r.payoffs);
                rows.push_back(row);
            }
            json out;
            out["model"] = model_name(cfg.model);
            out["rows"] = rows;
            return out.dump(2) + "\n";
        }
        case Format::Csv: {
            std::string out = csv_header(false);
            for (const auto &r : records) out += csv_row(profile_letters(r.profile), r.distribution, r.payoffs);
            return out;
        }
        case Format::Text: {
            std::string out = "profile  outcomes                           Alice     Bob   Colin    Doug\n";
            for (const auto &r : records) {
                std::string outcomes;
                for (Outcome k = 0; k < kNumOutcomes; ++k) {
                    if (r.distribution[k] < 5e-5) continue;
                    if (!outcomes.empty()) outcomes += " ";
                    outcomes += outcome_label(k) + ":" + fixed4(r.distribution[k]);
                }
                if (outcomes.size() < 33) outcomes.append(33 - outcomes.size(), ' ');
                out += profile_letters(r.profile) + "     " + outcomes;
                for (double v : r.payoffs) out += pad(fixed4(v), 8);
                out += "\n";
            }
            return out;
        }
    }
    return {};
}

std::string run_analyze(const RunConfig &cfg) {
    const auto records = enumerate_table(cfg.model, load_payoffs(cfg));
    const EquilibriumReport report = analyze(records);

    std::vector<NamedProfile> checked;
    if (cfg.profile) {
        checked.push_back(named_only(*cfg.profile));
        if (cfg.model == Model::Classical) (void)classical_distribution(*cfg.profile);
    } else {
        if (cfg.model == Model::Quantum) checked.push_back({Move::A, Move::A, Move::A, Move::A});
        checked.push_back({Move::E, Move::E, Move::E, Move::E});
        checked.push_back({Move::C, Move::C, Move::C, Move::C});
    }

    struct Check {
        NamedProfile profile;
        PayoffVector payoffs;
        std::vector<Deviation> deviations;
        std::optional<Deviation> witness;  // most profitable deviation
    };
    std::vector<Check> checks;
    for (const auto &p : checked) {
        Check c{p, find_record(records, p).payoffs, unilateral_deviations(records, p), std::nullopt};
        for (const auto &d : c.deviations) {
            if (d.profitable() && (!c.witness || d.payoff - d.baseline > c.witness->payoff - c.witness->baseline)) {
                c.witness = d;
            }
        }
        checks.push_back(std::move(c));
    }

    auto letters_of = [](const std::vector<NamedProfile> &ps) {
        json out = json::array();
        for (const auto &p : ps) out.push_back(profile_letters(p));
        return out;
    };
    const double optimum =
        report.symmetric_optima.empty() ? 0.0 : find_record(records, report.symmetric_optima.front()).payoffs[0];

    switch (cfg.format) {
        case Format::Json: {
            json out;
            out["model"] = model_name(cfg.model);
            out["profiles"] = records.size();
            out["nash"] = letters_of(report.nash);
            out["strict_nash"] = letters_of(report.strict_nash);
            out["pareto_standard"] = letters_of(report.pareto_standard);
            out["symmetric_optima"] = letters_of(report.symmetric_optima);
            out["symmetric_optimum_payoff"] = report.symmetric_optima.empty() ? json(nullptr) : json(optimum);
            json dom = json::object();
            for (Player p : kAllPlayers) {
                const auto &m = report.dominant[index_of(p)];
                dom[std::string(player_name(p))] = m ? json(std::string(1, move_letter(*m))) : json(nullptr);
            }
            out["dominant"] = dom;
            json checks_json = json::array();
            for (const auto &c : checks) {
                json cj;
                cj["profile"] = profile_letters(c.profile);
                cj["payoffs"] = payoff_json(c.payoffs);
                json devs = json::array();
                for (const auto &d : c.deviations) {
                    json dj;
                    dj["player"] = player_name(d.player);
                    dj["move"] = std::string(1, move_letter(d.move));
                    dj["payoff"] = d.payoff;
                    dj["baseline"] = d.baseline;
                    dj["profitable"] = d.profitable();
                    devs.push_back(dj);
                }
                cj["deviations"] = devs;
                cj["stable"] = !c.witness.has_value();
                if (c.witness) {
                    json w;
                    w["player"] = player_name(c.witness->player);
                    w["move"] = std::string(1, move_letter(c.witness->move));
                    w["payoff"] = c.witness->payoff;
                    w["baseline"] = c.witness->baseline;
                    cj["witness"] = w;
                } else {
                    cj["witness"] = nullptr;
                }
                checks_json.push_back(cj);
            }
            out["deviation_checks"] = checks_json;
            json brs = json::array();
            for (const auto &b : report.best_responses) {
                json bj;
                bj["player"] = player_name(b.player);
                bj["opponents"] = opponents_text(b.opponents);
                bj["moves"] = moves_text(b.response.moves);
                bj["payoff"] = b.response.payoff;
                brs.push_back(bj);
            }
            out["best_responses"] = brs;
            return out.dump(2) + "\n";
        }
        case Format::Csv: {
            std::string out = "section,profile,player,move,value\n";
            for (const auto &p : report.nash) out += "nash," + profile_letters(p) + ",,,\n";
            for (const auto &p : report.strict_nash) out += "strict_nash," + profile_letters(p) + ",,,\n";
            for (const auto &p : report.pareto_standard) out += "pareto_standard," + profile_letters(p) + ",,,\n";
            for (const auto &p : report.symmetric_optima) {
                out += "symmetric_optimum," + profile_letters(p) + ",,," + full(optimum) + "\n";
            }
            for (Player p : kAllPlayers) {
                const auto &m = report.dominant[index_of(p)];
                out += "dominant,," + std::string(player_name(p)) + "," + (m ? std::string(1, move_letter(*m)) : "") +
                       ",\n";
            }
            for (const auto &c : checks) {
                for (const auto &d : c.deviations) {
                    out += "deviation," + profile_letters(c.profile) + "," + std::string(player_name(d.player)) + "," +
                           move_letter(d.move) + "," + full(d.payoff) + "\n";
                }
            }
            for (const auto &b : report.best_responses) {
                out += "best_response," + opponents_text(b.opponents) + "," + std::string(player_name(b.player)) + "," +
                       moves_text(b.response.moves) + "," + full(b.response.payoff) + "\n";
            }
            return out;
        }
        case Format::Text: {
            auto list = [](const std::vector<NamedProfile> &ps) {
                std::string s;
                for (const auto &p : ps) s += (s.empty() ? "" : " ") + profile_letters(p);
                return s.empty() ? std::string("(none)") : s;
            };
            std::string out = "model: " + std::string(model_name(cfg.model)) + " (" + std::to_string(records.size()) +
                              " profiles)\n";
            out += "nash equilibria (" + std::to_string(report.nash.size()) + "): " + list(report.nash) + "\n";
            out += "strict nash equilibria (" + std::to_string(report.strict_nash.size()) +
                   "): " + list(report.strict_nash) + "\n";
            out += "pareto optimal, standard (" + std::to_string(report.pareto_standard.size()) +
                   "): " + list(report.pareto_standard) + "\n";
            out += "symmetric optima (" + std::to_string(report.symmetric_optima.size()) +
                   "): " + list(report.symmetric_optima);
            if (!report.symmetric_optima.empty()) out += "  payoff " + fixed4(optimum) + " each";
            out += "\ndominant strategies:";
            for (Player p : kAllPlayers) {
                const auto &m = report.dominant[index_of(p)];
                out += " " + std::string(player_name(p)) + "=" + (m ? std::string(1, move_letter(*m)) : "none");
            }
            out += "\n";
            for (const auto &c : checks) {
                out += "\nunilateral deviations from " + profile_letters(c.profile) + ":\n";
                for (const auto &d : c.deviations) {
                    out += "  " + std::string(player_name(d.player)) + " -> " + move_letter(d.move) + ": " +
                           fixed4(d.payoff) + (d.profitable() ? " >  " : " <= ") + fixed4(d.baseline) +
                           (d.profitable() ? "  profitable\n" : "  ok\n");
                }
                if (c.witness) {
                    out += "  FAIL " + profile_letters(c.profile) + " is not an equilibrium; witness: " +
                           std::string(player_name(c.witness->player)) + " -> " + move_letter(c.witness->move) +
                           " raises " + fixed4(c.witness->baseline) + " to " + fixed4(c.witness->payoff) + "\n";
                } else {
                    out += "  PASS no player gains by deviating from " + profile_letters(c.profile) + "\n";
                }
            }
            out += "\nbest responses:\n";
            for (const auto &b : report.best_responses) {
                out += "  " + std::string(player_name(b.player)) + " vs " + opponents_text(b.opponents) + ": " +
                       moves_text(b.response.moves) + " (" + fixed4(b.response.payoff) + ")\n";
            }
            return out;
        }
    }
    return {};
}

std::string run_sweep(const RunConfig &cfg) {
    const SweepGrid &g = cfg.sweep;
    if (cfg.model != Model::Quantum) throw UsageError("sweep needs the quantum model");
    if (!g.others) throw UsageError("sweep requires --others");
    if (g.theta_steps < 2 || g.phi_steps < 2) throw UsageError("--theta-steps and --phi-steps must be >= 2");
    const PayoffTable table = load_payoffs(cfg);
    const std::size_t i = index_of(g.player);

    struct Cell {
        double theta, phi, payoff;
    };
    std::vector<Cell> cells;
    for (std::size_t a = 0; a < g.theta_steps; ++a) {
        const double theta =
            a + 1 == g.theta_steps ? std::numbers::pi : std::numbers::pi * static_cast<double>(a) / (g.theta_steps - 1);
        for (std::size_t b = 0; b < g.phi_steps; ++b) {
            const double phi = b + 1 == g.phi_steps ? std::numbers::pi / 2
                                                    : (std::numbers::pi / 2) * static_cast<double>(b) / (g.phi_steps - 1);
            StrategyProfile profile = to_strategy_profile(with_player(*g.others, g.player, Move::C));
            profile[i] = Strategy::parametric(theta, phi);
            cells.push_back({theta, phi, expected_payoffs(ewl::outcome_distribution(profile), table)[i]});
        }
    }

    switch (cfg.format) {
        case Format::Json: {
            json grid = json::array();
            for (const auto &c : cells) grid.push_back(json{{"theta", c.theta}, {"phi", c.phi}, {"payoff", c.payoff}});
            json out;
            out["player"] = player_name(g.player);
            out["others"] = opponents_text(*g.others);
            out["theta_steps"] = g.theta_steps;
            out["phi_steps"] = g.phi_steps;
            out["grid"] = grid;
            return out.dump(2) + "\n";
        }
        case Format::Csv: {
            std::string out = "theta,phi,payoff\n";
            for (const auto &c : cells) out += full(c.theta) + "," + full(c.phi) + "," + full(c.payoff) + "\n";
            return out;
        }
        case Format::Text: {
            std::string out = std::string(player_name(g.player)) + " payoff vs " + opponents_text(*g.others) +
                              " (rows theta, columns phi)\n" + pad("theta\\phi", 9);
            for (std::size_t b = 0; b < g.phi_steps; ++b) out += pad(fixed4(cells[b].phi), 9);
            out += "\n";
            for (std::size_t a = 0; a < g.theta_steps; ++a) {
                out += pad(fixed4(cells[a * g.phi_steps].theta), 9);
                for (std::size_t b = 0; b < g.phi_steps; ++b) out += pad(fixed4(cells[a * g.phi_steps + b].payoff), 9);
                out += "\n";
            }
            return out;
        }
    }
    return {};
}

std::string run_export_qasm(const RunConfig &cfg) {
    if (!cfg.profile) throw UsageError("export-qasm requires --profile");
    return qasm::export_qasm(circuit::build_game_circuit(*cfg.profile));
}

std::string run(const RunConfig &cfg) {
    switch (cfg.command) {
        case Command::Simulate: return run_simulate(cfg);
        case Command::Table: return run_table(cfg);
        case Command::Analyze: return run_analyze(cfg);
        case Command::Sweep: return run_sweep(cfg);
        case Command::ExportQasm: return run_export_qasm(cfg);
    }
    throw UsageError("unknown command");
}

void emit(const RunConfig &cfg, const std::string &text) {
    if (!cfg.out_path) {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream out(*cfg.out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + *cfg.out_path + "'");
    out << text;
    out.flush();
    if (!out) throw IoError("error writing '" + *cfg.out_path + "'");
}

int main_entry(int argc, const char *const *argv) {
    CLI::App app{"Quantum (EWL) four-player diner's dilemma: simulation, equilibria and circuits"};
    app.require_subcommand(1);

    std::string model = "quantum";
    std::string format = "text";
    std::string profile;
    std::string payoffs;
    std::string out;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::string player = "D";
    std::string others;
    std::size_t theta_steps = 0;
    std::size_t phi_steps = 0;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--model", model, "classical|quantum")->check(CLI::IsMember({"classical", "quantum"}));
        sub->add_option("--payoffs", payoffs, "JSON payoff table (default: built-in)");
        sub->add_option("--format", format, "text|json|csv")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--out", out, "write output to this file instead of stdout");
    };

    auto *simulate = app.add_subcommand("simulate", "final-state distribution and payoffs for one profile");
    add_common(simulate);
    simulate->add_option("--profile", profile, "e.g. C,E,C,E or theta=0.3:phi=1.2,C,E,A")->required();
    auto *shots_opt = simulate->add_option("--shots", shots, "sample this many shots");
    auto *seed_opt = simulate->add_option("--seed", seed, "RNG seed for --shots");

    auto *table = app.add_subcommand("table", "payoff table over every named profile");
    add_common(table);

    auto *analyze = app.add_subcommand("analyze", "Nash, Pareto, best responses and deviation checks");
    add_common(analyze);
    analyze->add_option("--profile", profile, "profile whose unilateral deviations are listed");

    auto *sweep = app.add_subcommand("sweep", "one player's payoff over the (theta, phi) grid");
    add_common(sweep);
    sweep->add_option("--player", player, "A|B|C|D");
    sweep->add_option("--others", others, "the other players' moves, e.g. EEE")->required();
    sweep->add_option("--theta-steps", theta_steps, "grid points in theta (>= 2)")->required();
    sweep->add_option("--phi-steps", phi_steps, "grid points in phi (>= 2)")->required();

    auto *export_qasm = app.add_subcommand("export-qasm", "OpenQASM 2.0 game circuit for a profile");
    export_qasm->add_option("--profile", profile, "strategy profile")->required();
    export_qasm->add_option("--out", out, "write output to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        RunConfig cfg;
        cfg.model = parse_model(model);
        cfg.format = parse_format(format);
        if (!payoffs.empty()) cfg.payoff_path = payoffs;
        if (!out.empty()) cfg.out_path = out;
        if (!profile.empty()) cfg.profile = parse_profile(profile);
        if (*simulate) {
            cfg.command = Command::Simulate;
            if (shots_opt->count()) cfg.shots = shots;
            if (seed_opt->count()) cfg.seed = seed;
            if (cfg.shots && *cfg.shots == 0) throw UsageError("--shots must be at least 1");
        } else if (*table) {
            cfg.command = Command::Table;
        } else if (*analyze) {
            cfg.command = Command::Analyze;
        } else if (*sweep) {
            cfg.command = Command::Sweep;
            try {
                cfg.sweep.player = parse_player(player);
            } catch (const DomainError &e) {
                throw UsageError(e.what());
            }
            cfg.sweep.others = parse_opponents(others);
            cfg.sweep.theta_steps = theta_steps;
            cfg.sweep.phi_steps = phi_steps;
        } else if (*export_qasm) {
            cfg.command = Command::ExportQasm;
        }
        emit(cfg, run(cfg));
        return 0;
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const IoError &e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace qdiner::cli
