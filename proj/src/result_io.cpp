// SPDX-License-Identifier: Apache-2.0
//
// cfmimo - downlink simulation library for user-centric cell-free massive MIMO
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "cfmimo/harness.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace cfmimo {

namespace {

// %.17g round-trips IEEE doubles exactly, so parse(emit(t)) == t.
std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string stem_of(const std::string &path) {
    const auto dot = path.find_last_of('.');
    const auto slash = path.find_last_of("/\\");
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path;
    return path.substr(0, dot);
}

nlohmann::ordered_json config_to_json(const SystemConfig &c) {
    nlohmann::ordered_json j;
    j["num_aps"] = c.num_aps;
    j["ants_per_ap"] = c.ants_per_ap;
    j["num_ues"] = c.num_ues;
    j["num_sched"] = c.num_sched;
    j["area_side"] = c.area_side;
    j["rho_f"] = c.rho_f;
    j["sigma_w2"] = c.sigma_w2;
    j["alpha"] = c.alpha;
    j["kappa1"] = c.kappa1;
    j["kappa2"] = c.kappa2;
    j["kappa1_scale"] = c.kappa1_scale;
    j["kappa2_scale"] = c.kappa2_scale;
    j["sigma_sh_db"] = c.sigma_sh_db;
    j["n_sym"] = c.n_sym;
    j["p_max"] = c.p_max;
    j["seed"] = c.seed;
    j["constellation"] = c.constellation == constellation_t::gaussian ? "gaussian" : "qpsk";
    j["tight_power_projection"] = c.tight_power_projection;
    j["lambda_scale"] = c.lambda_scale;
    j["gd_iters"] = c.gd_iters;
    return j;
}

} // namespace

void emit(const ResultTable &table, const ExperimentSpec &spec, const std::string &path) {
    {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot open output file: " + path);
        out << "method,snr_db,mean_sr,std_sr,trials,seed\n";
        for (const auto &row : table.rows) {
            out << row.method << ',' << fmt_double(row.snr_db) << ','
                << fmt_double(row.mean_sr) << ',' << fmt_double(row.std_sr) << ','
                << row.trials << ',' << row.seed << '\n';
        }
        if (!out)
            throw std::runtime_error("write failed: " + path);
    }

    if (!table.complexity.empty()) {
        const std::string fpath = stem_of(path) + "_flops.csv";
        std::ofstream out(fpath, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot open output file: " + fpath);
        out << "method,m_total,flops\n";
        for (const auto &row : table.complexity)
            out << row.method << ',' << row.m_total << ',' << fmt_double(row.flops) << '\n';
        if (!out)
            throw std::runtime_error("write failed: " + fpath);
    }

    {
        nlohmann::ordered_json j;
        j["system"] = config_to_json(spec.base);
        j["snr_grid_db"] = spec.snr_grid_db;
        std::vector<std::string> names;
        for (const auto m : spec.methods)
            names.push_back(method_name(m));
        j["methods"] = names;
        j["trials"] = spec.trials;
        j["symbols_per_trial"] = spec.symbols_per_trial;
        j["lambda_sweep"] = spec.lambda_sweep;
        j["output_path"] = spec.output_path;
        j["threads"] = spec.threads;
        j["failed_trials"] = table.failed_trials;
        const std::string jpath = path + ".json";
        std::ofstream out(jpath, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot open output file: " + jpath);
        out << j.dump(2) << '\n';
        if (!out)
            throw std::runtime_error("write failed: " + jpath);
    }
}

ResultTable parse_result_csv(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open input file: " + path);
    std::string line;
    if (!std::getline(in, line) || line != "method,snr_db,mean_sr,std_sr,trials,seed")
        throw std::runtime_error("unexpected CSV header in " + path);

    ResultTable table;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::stringstream ss(line);
        std::string field;
        ResultRow row;
        std::getline(ss, row.method, ',');
        std::getline(ss, field, ',');
        row.snr_db = std::stod(field);
        std::getline(ss, field, ',');
        row.mean_sr = std::stod(field);
        std::getline(ss, field, ',');
        row.std_sr = std::stod(field);
        std::getline(ss, field, ',');
        row.trials = static_cast<arma::uword>(std::stoull(field));
        std::getline(ss, field, ',');
        row.seed = std::stoull(field);
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace cfmimo
