// Copyright 2026 The GaussFisher Authors
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

#include <cmath>
#include <sstream>

#include "gaussfisher/cli.hpp"
#include "gaussfisher/errors.hpp"

namespace gaussfisher::cli {

namespace {

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string part;
    std::istringstream in(s);
    while (std::getline(in, part, sep)) out.push_back(part);
    return out;
}

double to_double(const std::string &s, const std::string &where) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != s.size() || s.empty() || !std::isfinite(v)) {
        throw ValidationError(where + ": expected a finite number, got '" + s + "'");
    }
    return v;
}

// Upper end of an axis for the given figure.
double axis_limit(const std::string &figure) {
    if (figure == "2b") return 1.0;
    if (figure == "4b") return 2.0 * sts_saddle_occupancy();
    return INFINITY;
}

} // namespace

Axis Axis::parse(const std::string &name, const std::string &range) {
    const std::string where = "axis " + name;
    const auto parts = split(range, ':');
    if (parts.size() != 3 && parts.size() != 4) {
        throw ValidationError(where + ": expected lo:hi:count or lo:hi:count:log");
    }
    Axis a;
    a.name = name;
    a.lo = to_double(parts[0], where + " lo");
    a.hi = to_double(parts[1], where + " hi");
    const double count = to_double(parts[2], where + " count");
    if (count != std::floor(count) || count < 2 || count > 1e6) {
        throw ValidationError(where + ": count must be an integer >= 2");
    }
    a.count = static_cast<int>(count);
    if (parts.size() == 4) {
        if (parts[3] != "log") throw ValidationError(where + ": fourth field must be 'log'");
        a.log = true;
    }
    if (!(a.hi > a.lo)) throw ValidationError(where + ": need lo < hi");
    if (a.log && !(a.lo > 0.0)) throw ValidationError(where + ": log axis needs lo > 0");
    return a;
}

std::vector<double> Axis::samples() const {
    std::vector<double> out(count);
    for (int k = 0; k < count; ++k) {
        const double t = static_cast<double>(k) / (count - 1);
        out[k] = log ? lo * std::pow(hi / lo, t) : lo + t * (hi - lo);
    }
    out.back() = hi;
    return out;
}

const std::vector<std::string> &figure_names() {
    static const std::vector<std::string> names{"1", "2a", "2b", "3", "4a", "4b", "5"};
    return names;
}

GridSpec default_grid(const std::string &figure) {
    const double ns = sts_saddle_occupancy();
    GridSpec g;
    if (figure == "1" || figure == "3") {
        g.axes = {{"n1", 0.0, 5.0, 51, false}, {"n2", 0.0, 5.0, 51, false}};
    } else if (figure == "2a") {
        g.axes = {{"n", 5e-3, 5e7, 201, true}};
    } else if (figure == "2b") {
        g.axes = {{"n1", 0.0, 1.0, 101, false}};
    } else if (figure == "4a") {
        g.axes = {{"n", ns * 1e-4, ns * 1e8, 241, true}};
    } else if (figure == "4b") {
        g.axes = {{"n1", 0.0, 2.0 * ns, 101, false}};
    } else if (figure == "5") {
        g.axes = {{"n1", 8e-3, 8e7, 201, true}};
    } else {
        throw ValidationError("unknown figure '" + figure + "' (1, 2a, 2b, 3, 4a, 4b, 5)");
    }
    return g;
}

GridSpec merge_axes(const std::string &figure, const std::vector<Axis> &overrides) {
    GridSpec g = default_grid(figure);
    for (const Axis &o : overrides) {
        bool found = false;
        for (Axis &a : g.axes) {
            if (a.name == o.name) {
                a = o;
                found = true;
            }
        }
        if (!found) {
            std::string names;
            for (const Axis &a : g.axes) names += (names.empty() ? "" : ", ") + a.name;
            throw ValidationError("axis mismatch: figure " + figure + " has axes {" + names +
                                  "}, got '" + o.name + "'");
        }
    }
    const double limit = axis_limit(figure);
    for (const Axis &a : g.axes) {
        if (a.lo < 0.0 || a.hi > limit * (1.0 + 1e-15)) {
            std::ostringstream os;
            os << "axis " << a.name << " of figure " << figure << " must lie in [0, " << limit << "]";
            throw ValidationError(os.str());
        }
    }
    return g;
}

} // namespace gaussfisher::cli
