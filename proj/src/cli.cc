// Copyright 2026 The Swapnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "swapnet/cli.h"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "swapnet/cycle.h"
#include "swapnet/errors.h"
#include "swapnet/genfun.h"
#include "swapnet/invariants.h"
#include "swapnet/network.h"
#include "swapnet/serialize.h"

namespace swapnet {

namespace {

struct Options {
    bool json = false;
    std::optional<uint64_t> budget;
    uint64_t d = 0;
    uint64_t count = 0;
    std::optional<uint64_t> modulus;
    uint64_t max_n = 0;
    int jobs = 0;
    bool csv = false;
    uint64_t steps = 0;
    std::string circuit_file;
    std::string state;
    uint64_t seed = 0;
    uint64_t n = 0;
    double tol = 1e-6;
    uint64_t gates = 0;
    std::string format = "gatelist";
    bool dense = false;
};

std::optional<uint64_t> resolve_budget(const std::optional<uint64_t> &flag) {
    if (flag) {
        return flag;
    }
    if (const char *env = std::getenv("SWAPNET_BUDGET"); env != nullptr && *env != '\0') {
        char *end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (*end != '\0' || v == 0) {
            throw InvalidArgument(std::string("SWAPNET_BUDGET is not a positive integer: ") + env);
        }
        return static_cast<uint64_t>(v);
    }
    return std::nullopt;
}

std::string join(const std::vector<std::string> &items, const std::string &sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) {
            out += sep;
        }
        out += items[i];
    }
    return out;
}

std::string permutation_text(const std::vector<uint64_t> &perm) {
    std::vector<std::string> parts;
    for (uint64_t v : perm) {
        parts.push_back(std::to_string(v));
    }
    return "[" + join(parts, " ") + "]";
}

int cmd_seq(const Options &o, std::ostream &out) {
    Json j;
    j["d"] = o.d;
    j["count"] = o.count;
    std::vector<std::string> text;
    if (o.modulus) {
        auto terms = seq_stream(o.d, *o.modulus, o.count);
        j["modulus"] = *o.modulus;
        j["terms"] = sequence_to_json(terms);
        for (const Residue &r : terms) {
            text.push_back(std::to_string(r.value()));
        }
    } else {
        ExactSeq s(o.d, o.count);
        j["modulus"] = nullptr;
        j["terms"] = sequence_to_json(s.terms());
        for (const BigInt &t : s.terms()) {
            text.push_back(t.str());
        }
    }
    if (o.json) {
        out << j.dump() << "\n";
    } else {
        out << join(text, ", ") << "\n";
    }
    return kExitOk;
}

int cmd_cycle(const Options &o, std::ostream &out) {
    CycleReport r = cycle_length(o.d, resolve_budget(o.budget));
    if (o.json) {
        out << to_json(r).dump() << "\n";
        return kExitOk;
    }
    std::vector<std::string> lens;
    std::vector<std::string> factors;
    for (const FactorCycle &f : r.per_factor) {
        lens.push_back(std::to_string(f.length));
        factors.push_back("mod " + std::to_string(f.prime_power) + ": " + std::to_string(f.length));
    }
    out << "d=" << r.d << " cycle length " << r.length.str();
    if (r.per_factor.size() > 1) {
        out << " = LCM(" << join(lens, ", ") << ")";
    }
    out << "\n";
    out << "factors: " << join(factors, ", ") << "\n";
    out << "shift: " << r.shift << " permutation: " << permutation_text(r.permutation) << "\n";
    out << "method: " << to_string(r.method);
    if (r.conjecture_holds) {
        out << " (prediction " << (*r.conjecture_holds ? "matches" : "does not match") << ")";
    }
    out << "\n";
    return kExitOk;
}

int cmd_scan(const Options &o, std::ostream &out) {
    auto entries = scan(o.max_n, resolve_budget(o.budget), Exec::parallel, o.jobs);
    bool inconclusive = false;
    for (const auto &e : entries) {
        inconclusive |= !e.report.has_value();
    }
    if (o.json) {
        Json arr = Json::array();
        for (const auto &e : entries) {
            arr.push_back(to_json(e));
        }
        out << arr.dump() << "\n";
    } else if (o.csv) {
        out << scan_to_csv(entries);
    } else {
        for (const auto &e : entries) {
            out << e.d << "\t";
            if (!e.report) {
                out << "inconclusive\n";
                continue;
            }
            const CycleReport &r = *e.report;
            out << r.length.str() << "\tshift " << r.shift << "\t" << to_string(r.method);
            if (r.conjecture_holds) {
                out << "\tconjecture " << (*r.conjecture_holds ? "pass" : "fail");
            }
            out << "\n";
        }
    }
    return inconclusive ? kExitInconclusive : kExitOk;
}

int cmd_swap(const Options &o, std::ostream &out) {
    SwapVerdict v = verify_swap(o.d, resolve_budget(o.budget));
    if (o.json) {
        out << to_json(v).dump() << "\n";
        return kExitOk;
    }
    switch (v.kind) {
        case SwapKind::swap:
            out << "SWAP: cyclic shift by -1, " << v.gate_count << " gates\n";
            break;
        case SwapKind::grouped: {
            Factorization f = factorize(o.d);
            const uint64_t p = f.factors[0].p;
            out << "GROUPED: cyclic shift by " << v.shift << " on " << o.d / p << " groups of " << p
                << ", " << v.gate_count << " gates\n";
            break;
        }
        case SwapKind::identity:
            out << "IDENTITY: " << v.gate_count << " gates\n";
            break;
        case SwapKind::other:
            out << "OTHER: permutation " << permutation_text(v.permutation) << ", "
                << v.gate_count << " gates\n";
            break;
    }
    return kExitOk;
}

int cmd_trace(const Options &o, std::ostream &out) {
    TraceArray tr = trace_array(o.d, o.steps);
    if (o.json) {
        Json j;
        j["d"] = o.d;
        j["first_time"] = tr.first_time();
        j["rows"] = Json::array();
        for (uint64_t i = 0; i < o.d; ++i) {
            j["rows"].push_back(tr.row(i));
        }
        std::vector<uint64_t> systems;
        for (int64_t t = tr.first_time(); t <= tr.last_time(); ++t) {
            systems.push_back(tr.system_at(t));
        }
        j["systems"] = systems;
        out << j.dump() << "\n";
        return kExitOk;
    }
    std::vector<std::string> times;
    for (int64_t t = tr.first_time(); t <= tr.last_time(); ++t) {
        times.push_back(std::to_string(t));
    }
    out << "t: " << join(times, " ") << "\n";
    for (uint64_t i = 0; i < o.d; ++i) {
        std::vector<std::string> cells;
        for (uint64_t v : tr.row(i)) {
            cells.push_back(std::to_string(v));
        }
        out << "b" << i << ": " << join(cells, " ") << "\n";
    }
    return kExitOk;
}

StateVector parse_state(const Options &o, uint64_t d, uint64_t n) {
    std::istringstream words(o.state);
    std::string head;
    words >> head;
    uint64_t seed = o.seed;
    auto read_seed = [&] {
        std::string flag;
        if (words >> flag) {
            if (flag != "--seed" || !(words >> seed)) {
                throw InvalidArgument("--state must be 'random [--seed K]'");
            }
        }
    };
    if (head == "random") {
        read_seed();
        return StateVector::random(d, n, seed);
    }
    if (head == "random-product") {
        read_seed();
        return StateVector::random_product(d, n, seed);
    }
    if (head.size() != n) {
        throw InvalidArgument("basis string '" + head + "' must have " + std::to_string(n) +
                              " digits");
    }
    std::vector<uint64_t> digits;
    for (char c : head) {
        if (c < '0' || c > '9') {
            throw InvalidArgument("basis string must be decimal digits");
        }
        digits.push_back(static_cast<uint64_t>(c - '0'));
    }
    return StateVector::basis(d, digits);
}

std::string basis_label(uint64_t d, uint64_t n, uint64_t x) {
    std::string s;
    for (uint64_t digit : basis_digits(d, n, x)) {
        s += std::to_string(digit);
        if (d > 10) {
            s += ",";
        }
    }
    if (d > 10 && !s.empty()) {
        s.pop_back();
    }
    return s;
}

int cmd_simulate(const Options &o, std::ostream &out) {
    std::ifstream in(o.circuit_file);
    if (!in) {
        throw InvalidArgument("cannot read circuit file '" + o.circuit_file + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    const Circuit c = parse_circuit(buf.str());
    const StateVector input = parse_state(o, c.d(), c.n_systems());
    const StateVector result = simulate(c, input);
    constexpr double kShown = 1e-15;
    if (o.json) {
        Json j;
        j["d"] = c.d();
        j["systems"] = c.n_systems();
        j["gates"] = c.size();
        j["amplitudes"] = Json::array();
        for (uint64_t x = 0; x < result.amplitudes().size(); ++x) {
            if (std::abs(result[x]) > kShown) {
                j["amplitudes"].push_back(Json{{"basis", basis_label(c.d(), c.n_systems(), x)},
                                               {"re", result[x].real()},
                                               {"im", result[x].imag()}});
            }
        }
        j["norm"] = result.norm();
        out << j.dump() << "\n";
        return kExitOk;
    }
    out << "d=" << c.d() << " systems=" << c.n_systems() << " gates=" << c.size() << "\n";
    for (uint64_t x = 0; x < result.amplitudes().size(); ++x) {
        if (std::abs(result[x]) > kShown) {
            out << "|" << basis_label(c.d(), c.n_systems(), x) << "> "
                << format_complex(result[x]) << "\n";
        }
    }
    out << "norm " << format_real(result.norm()) << "\n";
    return kExitOk;
}

int cmd_closed_form(const Options &o, std::ostream &out) {
    const ClosedForm cf = closed_form(o.n);
    const double residual = compare_closed_vs_exact(o.n, o.count, o.tol);
    std::vector<std::string> terms;
    for (uint64_t j = 0; j < o.count; ++j) {
        terms.push_back(std::to_string(eval_closed(cf, j).rounded));
    }
    if (o.json) {
        Json j = to_json(cf);
        j["count"] = o.count;
        j["terms"] = terms;
        j["max_residual"] = residual;
        out << j.dump() << "\n";
        return kExitOk;
    }
    out << "reciprocal roots of 1-z-z^" << o.n << ":\n";
    for (std::size_t l = 0; l < cf.alphas.size(); ++l) {
        out << "alpha_" << l + 1 << " = " << format_complex(cf.alphas[l]) << "\n";
    }
    out << "weights beta_l = -alpha_l/B'(1/alpha_l):\n";
    for (std::size_t l = 0; l < cf.betas.size(); ++l) {
        out << "beta_" << l + 1 << " = " << format_complex(cf.betas[l]) << "\n";
    }
    out << "a_0.." << (o.count == 0 ? 0 : o.count - 1) << ": " << join(terms, ", ") << "\n";
    out << "max residual " << format_real(residual) << "\n";
    return kExitOk;
}

int cmd_export(const Options &o, std::ostream &out) {
    const Circuit c = build_cyclic_network(o.d, o.gates);
    if (o.dense) {
        out << render_dense(full_operator(c));
        return kExitOk;
    }
    if (o.format != "gatelist" && o.format != "json") {
        throw InvalidArgument("format must be gatelist or json");
    }
    const bool as_json = o.json || o.format == "json";
    out << export_circuit(c, as_json ? CircuitFormat::json : CircuitFormat::gatelist) << "\n";
    return kExitOk;
}

int cmd_check(const Options &o, std::ostream &out) {
    const auto results = run_invariant_suite();
    bool all = true;
    Json arr = Json::array();
    for (const auto &r : results) {
        all &= r.passed;
        if (o.json) {
            arr.push_back(Json{{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        } else {
            out << (r.passed ? "PASS " : "FAIL ") << r.name;
            if (!r.passed) {
                out << ": " << r.detail;
            }
            out << "\n";
        }
    }
    if (o.json) {
        out << Json{{"passed", all}, {"checks", arr}}.dump() << "\n";
    }
    return all ? kExitOk : kExitInternal;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Cyclic CNOT networks, binomial-summation sequences and their cycle lengths",
                 "swapnet"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "Emit one JSON document on stdout");

    auto *seq = app.add_subcommand("seq", "Terms a_0 .. a_{count-1} of the sequence");
    seq->add_option("--d", o.d, "Recurrence order")->required()->check(CLI::Range(2, 1 << 20));
    seq->add_option("--count", o.count, "Number of terms")->required();
    seq->add_option("--mod", o.modulus, "Reduce modulo M")->check(CLI::Range(uint64_t{2}, UINT64_MAX / 2));

    auto *cyc = app.add_subcommand("cycle", "Cycle length of (a_j) mod d");
    cyc->add_option("--d", o.d, "Dimension")->required()->check(CLI::Range(2, 1 << 20));
    cyc->add_option("--budget", o.budget, "Maximum period searched per prime-power factor");

    auto *scn = app.add_subcommand("scan", "Cycle reports for every dimension 2..max");
    scn->add_option("--max", o.max_n, "Largest dimension")->required()->check(CLI::Range(2, 1 << 20));
    scn->add_option("--budget", o.budget, "Maximum period searched per prime-power factor");
    scn->add_option("--jobs", o.jobs, "Worker threads (0 = all)")->check(CLI::NonNegativeNumber);
    scn->add_flag("--csv", o.csv, "CSV table instead of text");

    auto *swp = app.add_subcommand("swap", "Classify the permutation realised after one cycle");
    swp->add_option("--d", o.d, "Dimension")->required()->check(CLI::Range(2, 1 << 16));
    swp->add_option("--budget", o.budget, "Maximum period searched per prime-power factor");

    auto *trc = app.add_subcommand("trace", "Coefficient array b_{it} of the network");
    trc->add_option("--d", o.d, "Dimension")->required()->check(CLI::Range(2, 1 << 12));
    trc->add_option("--steps", o.steps, "Last time step")->required();

    auto *sim = app.add_subcommand("simulate", "State-vector simulation of a circuit file");
    sim->add_option("--circuit", o.circuit_file, "Gatelist or JSON circuit")->required();
    sim->add_option("--state", o.state, "Basis digits like 102, or 'random [--seed K]'")
        ->required();
    sim->add_option("--seed", o.seed, "Seed for random states");

    auto *cf = app.add_subcommand("closed-form", "Roots, weights and closed-form terms");
    cf->add_option("--n", o.n, "Recurrence order")->required()->check(CLI::Range(2, 64));
    cf->add_option("--count", o.count, "Terms to compare")->required();
    cf->add_option("--tol", o.tol, "Residual tolerance against the exact terms");

    auto *exp = app.add_subcommand("export", "Serialise the cyclic network");
    exp->add_option("--d", o.d, "Dimension")->required()->check(CLI::Range(2, 1 << 16));
    exp->add_option("--gates", o.gates, "Gate count")->required();
    exp->add_option("--format", o.format, "gatelist or json")
        ->check(CLI::IsMember({"gatelist", "json"}));
    exp->add_flag("--dense", o.dense, "Print the 0/1 basis matrix instead");

    auto *chk = app.add_subcommand("check", "Run the invariant suite");

    for (CLI::App *sub : {seq, cyc, scn, swp, trc, sim, cf, exp, chk}) {
        sub->fallthrough();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) {
        reversed.pop_back();  // program name
    }
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*seq) return cmd_seq(o, out);
        if (*cyc) return cmd_cycle(o, out);
        if (*scn) return cmd_scan(o, out);
        if (*swp) return cmd_swap(o, out);
        if (*trc) return cmd_trace(o, out);
        if (*sim) return cmd_simulate(o, out);
        if (*cf) return cmd_closed_form(o, out);
        if (*exp) return cmd_export(o, out);
        if (*chk) return cmd_check(o, out);
    } catch (const Inconclusive &e) {
        err << "inconclusive: " << e.what() << " (" << e.steps_taken() << " steps)\n";
        return kExitInconclusive;
    } catch (const InvalidArgument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SizeBudgetExceeded &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}

}  // namespace swapnet
