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

#include "swapnet/serialize.h"

#include <cmath>
#include <limits>
#include <sstream>

namespace swapnet {

std::string format_real(double x) {
    if (x == 0.0) {
        return "0";
    }
    std::ostringstream os;
    os.precision(10);
    os << x;
    return os.str();
}

std::string format_complex(Complex z) {
    if (z.imag() == 0.0) {
        return format_real(z.real());
    }
    std::string out = format_real(z.real());
    out += z.imag() < 0 ? "-" : "+";
    out += format_real(std::abs(z.imag()));
    out += "i";
    return out;
}

Json sequence_to_json(const std::vector<BigInt> &terms) {
    Json arr = Json::array();
    for (const BigInt &t : terms) {
        arr.push_back(t.str());
    }
    return arr;
}

Json sequence_to_json(const std::vector<Residue> &terms) {
    Json arr = Json::array();
    for (const Residue &t : terms) {
        arr.push_back(std::to_string(t.value()));
    }
    return arr;
}

Json bigint_to_json(const BigInt &value) {
    if (value >= 0 && value <= std::numeric_limits<uint64_t>::max()) {
        return value.convert_to<uint64_t>();
    }
    return value.str();
}

Json to_json(const CycleReport &report) {
    Json j;
    j["d"] = report.d;
    j["length"] = bigint_to_json(report.length);
    j["factors"] = Json::array();
    for (const FactorCycle &f : report.per_factor) {
        j["factors"].push_back(Json{{"pm", f.prime_power}, {"len", f.length}});
    }
    j["shift"] = report.shift;
    j["permutation"] = report.permutation;
    j["method"] = std::string(to_string(report.method));
    if (report.conjecture_holds) {
        j["conjecture"] = *report.conjecture_holds;
    }
    return j;
}

Json to_json(const ScanEntry &entry) {
    if (entry.report) {
        return to_json(*entry.report);
    }
    Json j;
    j["d"] = entry.d;
    j["inconclusive"] = entry.inconclusive;
    return j;
}

Json to_json(const ClosedForm &cf) {
    Json j;
    j["n"] = cf.n;
    j["alphas"] = Json::array();
    j["betas"] = Json::array();
    for (std::size_t l = 0; l < cf.alphas.size(); ++l) {
        j["alphas"].push_back({cf.alphas[l].real(), cf.alphas[l].imag()});
        j["betas"].push_back({cf.betas[l].real(), cf.betas[l].imag()});
    }
    j["residual"] = cf.residual;
    return j;
}

Json to_json(const SwapVerdict &verdict) {
    Json j;
    j["verdict"] = std::string(to_string(verdict.kind));
    j["shift"] = verdict.shift;
    j["gates"] = verdict.gate_count;
    j["permutation"] = verdict.permutation;
    return j;
}

std::string scan_to_csv(const std::vector<ScanEntry> &entries) {
    std::string out = "d,cycle_length,factor_lengths,shift,method,conjecture\n";
    for (const ScanEntry &e : entries) {
        out += std::to_string(e.d) + ",";
        if (!e.report) {
            out += ",,,inconclusive,\n";
            continue;
        }
        const CycleReport &r = *e.report;
        out += r.length.str() + ",";
        for (std::size_t i = 0; i < r.per_factor.size(); ++i) {
            if (i > 0) {
                out += ";";
            }
            out += std::to_string(r.per_factor[i].prime_power) + ":" +
                   std::to_string(r.per_factor[i].length);
        }
        out += "," + std::to_string(r.shift) + "," + std::string(to_string(r.method)) + ",";
        if (r.conjecture_holds) {
            out += *r.conjecture_holds ? "pass" : "fail";
        }
        out += "\n";
    }
    return out;
}

}  // namespace swapnet
