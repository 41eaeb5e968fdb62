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

#include "cfmimo/config_io.hpp"

#include <fstream>
#include <sstream>

namespace cfmimo {

namespace {

std::string trim(const std::string &s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string &s) {
    std::vector<std::string> out;
    std::string cur;
    for (const char c : s) {
        if (c == ' ' || c == '\t' || c == ',') {
            if (!cur.empty()) {
                out.push_back(cur);
                cur.clear();
            }
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty())
        out.push_back(cur);
    return out;
}

double to_double(const std::string &key, const std::string &v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size())
            throw std::invalid_argument("");
        return x;
    } catch (...) {
        throw std::invalid_argument("bad numeric value for " + key + ": " + v);
    }
}

arma::uword to_uword(const std::string &key, const std::string &v) {
    try {
        std::size_t pos = 0;
        const unsigned long long x = std::stoull(v, &pos);
        if (pos != v.size())
            throw std::invalid_argument("");
        return static_cast<arma::uword>(x);
    } catch (...) {
        throw std::invalid_argument("bad integer value for " + key + ": " + v);
    }
}

bool to_bool(const std::string &key, const std::string &v) {
    if (v == "true" || v == "1" || v == "yes")
        return true;
    if (v == "false" || v == "0" || v == "no")
        return false;
    throw std::invalid_argument("bad boolean value for " + key + ": " + v);
}

void apply_system_key(SystemConfig &c, const std::string &key, const std::string &v) {
    if (key == "num_aps")
        c.num_aps = to_uword(key, v);
    else if (key == "ants_per_ap")
        c.ants_per_ap = to_uword(key, v);
    else if (key == "num_ues")
        c.num_ues = to_uword(key, v);
    else if (key == "num_sched")
        c.num_sched = to_uword(key, v);
    else if (key == "area_side")
        c.area_side = to_double(key, v);
    else if (key == "rho_f")
        c.rho_f = to_double(key, v);
    else if (key == "sigma_w2")
        c.sigma_w2 = to_double(key, v);
    else if (key == "alpha")
        c.alpha = to_double(key, v);
    else if (key == "kappa1")
        c.kappa1 = to_double(key, v);
    else if (key == "kappa2")
        c.kappa2 = to_double(key, v);
    else if (key == "kappa1_scale")
        c.kappa1_scale = to_double(key, v);
    else if (key == "kappa2_scale")
        c.kappa2_scale = to_double(key, v);
    else if (key == "sigma_sh_db")
        c.sigma_sh_db = to_double(key, v);
    else if (key == "n_sym")
        c.n_sym = to_uword(key, v);
    else if (key == "p_max")
        c.p_max = to_double(key, v);
    else if (key == "seed")
        c.seed = std::stoull(v);
    else if (key == "constellation") {
        if (v == "gaussian")
            c.constellation = constellation_t::gaussian;
        else if (v == "qpsk")
            c.constellation = constellation_t::qpsk;
        else
            throw std::invalid_argument("unknown constellation: " + v);
    } else if (key == "tight_power_projection")
        c.tight_power_projection = to_bool(key, v);
    else if (key == "lambda_scale")
        c.lambda_scale = to_double(key, v);
    else if (key == "gd_iters")
        c.gd_iters = to_uword(key, v);
    else
        throw std::invalid_argument("unknown [system] key: " + key);
}

void apply_experiment_key(ExperimentSpec &spec, const std::string &key, const std::string &v) {
    if (key == "snr_grid_db") {
        spec.snr_grid_db.clear();
        for (const auto &tok : split_list(v))
            spec.snr_grid_db.push_back(to_double(key, tok));
    } else if (key == "methods") {
        spec.methods.clear();
        for (const auto &tok : split_list(v))
            spec.methods.push_back(method_from_name(tok));
    } else if (key == "trials")
        spec.trials = to_uword(key, v);
    else if (key == "symbols_per_trial")
        spec.symbols_per_trial = to_uword(key, v);
    else if (key == "lambda_sweep") {
        spec.lambda_sweep.clear();
        for (const auto &tok : split_list(v))
            spec.lambda_sweep.push_back(to_double(key, tok));
    } else if (key == "output")
        spec.output_path = v;
    else if (key == "threads")
        spec.threads = to_uword(key, v);
    else
        throw std::invalid_argument("unknown [experiment] key: " + key);
}

} // namespace

ExperimentSpec parse_experiment_spec(const std::string &text) {
    ExperimentSpec spec;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find_first_of("#;");
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::invalid_argument("malformed section header at line " +
                                            std::to_string(lineno));
            section = trim(line.substr(1, line.size() - 2));
            if (section != "system" && section != "experiment")
                throw std::invalid_argument("unknown section [" + section + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("expected key = value at line " +
                                        std::to_string(lineno));
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (section == "system")
            apply_system_key(spec.base, key, value);
        else if (section == "experiment")
            apply_experiment_key(spec, key, value);
        else
            throw std::invalid_argument("key outside of a section at line " +
                                        std::to_string(lineno));
    }
    return spec;
}

ExperimentSpec load_experiment_spec(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_experiment_spec(ss.str());
}

} // namespace cfmimo
