/*
   Copyright 2026 The qsync Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "qsync/cli.hpp"

#include <iostream>
#include <sstream>

#include "qsync/cyclic_code.hpp"
#include "qsync/errors.hpp"
#include "qsync/factorizer.hpp"
#include "qsync/qsc_builder.hpp"

namespace qsync::cli {

using nlohmann::json;

namespace {

json classes_report(std::uint64_t q) {
    const CyclotomicSystem sys = cyclotomic_classes(q);
    return {{"q", q},
            {"g", sys.generator()},
            {"D0", sys.members(ClassLabel::D0)},
            {"D1", sys.members(ClassLabel::D1)},
            {"E0", sys.members(ClassLabel::E0)},
            {"E1", sys.members(ClassLabel::E1)},
            {"Q", sys.members(ClassLabel::Q)}};
}

json cosets_report(std::uint64_t q, std::uint64_t r) {
    const CosetTable table = cyclotomy_cosets(q, r);
    json cosets = json::array();
    for (const auto& [rep, members] : table.cosets()) cosets.push_back({{"rep", rep}, {"members", members}});
    return {{"q", q}, {"r", r}, {"ell", table.ell()}, {"cosets", cosets}};
}

json factor_report(std::uint64_t q, std::uint64_t r) {
    const CyclotomicSystem sys = cyclotomic_classes(q);
    const MinimalPolyTable table = factor_unity(q, r);
    const ClassPolySet set = class_polys(sys, table);
    json out = factor_table_json(table, sys);
    json classes = json::object();
    for (const auto& [label, poly] : set.polys) {
        classes[std::string(to_string(label))] = {{"poly", poly.to_string()}, {"reps", set.reps_of(label)}};
    }
    out["classes"] = classes;
    out["theta"] = (q - 1) / (2 * table.ell());
    return out;
}

json distance_bounds(const CyclicCode& c) {
    if (!c.distance() || !c.distance()->exact()) return nullptr;
    const BoundSlack b = bound_slack(c);
    return {{"singleton_slack", b.singleton_slack}, {"hamming_max_t", b.hamming_max_t}, {"correctable", b.correctable}};
}

json code_report(const RunConfig& cfg) {
    require_pair(cfg.q, cfg.r, false);
    const CyclotomicSystem sys = cyclotomic_classes(cfg.q);
    const MinimalPolyTable table = factor_unity(cfg.q, cfg.r);
    const ClassPolySet set = class_polys(sys, table);
    const ClassSelector sel = ClassSelector::parse(cfg.classes);
    CyclicCode code(sel.generator(set), cfg.q);
    if (!cfg.remove.empty()) code = augment(code, table, cfg.remove);
    if (cfg.dual) code = dual_code(code);
    if (cfg.distances && code.k() > 0) {
        code = code.with_distance(min_distance(code, {.budget = cfg.budget}));
    }
    return {{"classes", sel.to_string()},
            {"dual", cfg.dual},
            {"removed", cfg.remove},
            {"code", code_record(code)},
            {"bounds", distance_bounds(code)}};
}

EnumerateOptions enumerate_options(const RunConfig& cfg) {
    EnumerateOptions opts;
    opts.compute_distances = cfg.distances;
    opts.distance.budget = cfg.budget;
    return opts;
}

json chain_report(const RunConfig& cfg) {
    const ClassSelector sel = ClassSelector::parse(cfg.classes);
    return chain_json(build_chain(cfg.q, cfg.r, sel, cfg.inner_remove, cfg.outer_remove, enumerate_options(cfg)));
}

json enumerate_report(const RunConfig& cfg) {
    if (!cfg.z) throw InvalidArgument("enumerate needs --z");
    require_pair(cfg.q, cfg.r, true);
    const ClassSelector sel = ClassSelector::parse(cfg.classes);
    const std::uint64_t ell = element_order(cfg.r, 2 * cfg.q);
    const std::uint64_t th = theta(cfg.q, cfg.r);
    const std::uint64_t z = *cfg.z;
    std::vector<ChainReport> chains;
    json out = {{"theorem", cfg.theorem}, {"q", cfg.q}, {"r", cfg.r}, {"classes", sel.to_string()},
                {"z", z},           {"ell", ell}, {"theta", th}};
    if (cfg.theorem == 1) {
        if (sel.parts.size() != 1 || (sel.parts[0] != ClassLabel::D0 && sel.parts[0] != ClassLabel::D1)) {
            throw InvalidArgument("theorem 1 enumerates D0 or D1 chains");
        }
        chains = enumerate_theorem1(cfg.q, cfg.r, sel.parts[0], z, enumerate_options(cfg));
        out["expected_dim"] = theorem1_dimension(cfg.q, ell, z);
        if (th < 2) {
            out["diagnostic"] = "theta < 2: the class polynomial is irreducible, no augmented chain exists";
        } else if (z + 2 > th) {
            out["diagnostic"] = "z outside 0 <= z <= theta - 2";
        }
    } else if (cfg.theorem == 2) {
        if (sel.parts.size() != 2) throw InvalidArgument("theorem 2 enumerates DiEj chains");
        chains = sweep_theorem2(cfg.q, cfg.r, sel.parts[0], sel.parts[1], z, enumerate_options(cfg));
        out["expected_dim"] = theorem2_dimension(ell, z);
        if (z + 2 > 2 * th) out["diagnostic"] = "z outside 0 <= z <= 2 theta - 2";
    } else {
        throw InvalidArgument("--theorem must be 1 or 2");
    }
    json list = json::array();
    for (const auto& c : chains) list.push_back(chain_json(c));
    out["chains"] = list;
    return out;
}

void render(const json& j, std::ostream& out, int indent, const std::string& key) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    const std::string label = key.empty() ? "" : key + ": ";
    const bool scalar_array =
        j.is_array() && std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
    if (j.is_object()) {
        if (!key.empty()) out << pad << key << ":\n";
        for (const auto& [k, v] : j.items()) render(v, out, key.empty() ? indent : indent + 2, k);
    } else if (scalar_array) {
        out << pad << label << "{";
        for (std::size_t i = 0; i < j.size(); ++i) out << (i ? "," : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
        out << "}\n";
    } else if (j.is_array()) {
        out << pad << key << ":\n";
        for (std::size_t i = 0; i < j.size(); ++i) render(j[i], out, indent + 2, "[" + std::to_string(i) + "]");
    } else {
        out << pad << label << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

class Scenarios {
   public:
    void check(const std::string& name, const std::string& expected, const std::string& actual) {
        list_.push_back({{"name", name}, {"expected", expected}, {"actual", actual}, {"pass", expected == actual}});
        (expected == actual ? passed_ : failed_)++;
    }
    template <class F>
    void guarded(const std::string& name, const std::string& expected, F&& compute) {
        try {
            check(name, expected, compute());
        } catch (const std::exception& e) {
            check(name, expected, std::string("error: ") + e.what());
        }
    }
    json finish() const { return {{"scenarios", list_}, {"passed", passed_}, {"failed", failed_}}; }

   private:
    json list_ = json::array();
    std::size_t passed_ = 0;
    std::size_t failed_ = 0;
};

std::string set_text(const std::vector<Residue>& v) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "}";
    return os.str();
}

std::string params_text(const CyclicCode& c) {
    const auto& d = c.distance();
    std::string dist = !d ? "?" : d->exact() ? std::to_string(d->lower)
                                             : std::to_string(d->lower) + ".." + std::to_string(d->upper);
    return "[" + std::to_string(c.n()) + "," + std::to_string(c.k()) + "," + dist + "]_" + std::to_string(c.r());
}

}  // namespace

Command parse_command(std::string_view name) {
    static const std::pair<std::string_view, Command> names[] = {
        {"classes", Command::Classes}, {"cosets", Command::Cosets},       {"factor", Command::Factor},
        {"code", Command::Code},       {"chain", Command::Chain},         {"enumerate", Command::Enumerate},
        {"regress", Command::Regress}};
    for (const auto& [n, c] : names) {
        if (n == name) return c;
    }
    throw InvalidArgument("unknown command '" + std::string(name) + "'");
}

std::set<Residue> parse_residue_list(std::string_view text) {
    std::set<Residue> out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string tok(text.substr(pos, comma - pos));
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
            throw InvalidArgument("malformed residue list '" + std::string(text) + "'");
        }
        out.insert(std::stoull(tok));
        pos = comma + 1;
    }
    return out;
}

json report(const RunConfig& cfg) {
    switch (cfg.command) {
        case Command::Classes: return classes_report(cfg.q);
        case Command::Cosets: return cosets_report(cfg.q, cfg.r);
        case Command::Factor: return factor_report(cfg.q, cfg.r);
        case Command::Code: return code_report(cfg);
        case Command::Chain: return chain_report(cfg);
        case Command::Enumerate: return enumerate_report(cfg);
        case Command::Regress: return regression_report();
    }
    throw InvalidArgument("unknown command");
}

json regression_report() {
    Scenarios s;
    const DistanceOptions budget{.budget = kDefaultDistanceBudget};

    const CyclotomicSystem sys13 = cyclotomic_classes(13);
    s.check("q13-classes/D0", "{1,23,9,25,3,17}", set_text(sys13.members(ClassLabel::D0)));
    s.check("q13-classes/D1", "{7,5,11,19,21,15}", set_text(sys13.members(ClassLabel::D1)));
    s.check("q13-classes/E0", "{2,20,18,24,6,8}", set_text(sys13.members(ClassLabel::E0)));
    s.check("q13-classes/E1", "{14,10,22,12,16,4}", set_text(sys13.members(ClassLabel::E1)));
    s.guarded("q13-r3/cosets", "{1,3,9}{2,6,18}{4,12,10}{5,15,19}{7,21,11}{8,24,20}{13}{14,16,22}{17,25,23}", [] {
        std::string all;
        const CosetTable table = cyclotomy_cosets(13, 3);
        for (const auto& [rep, members] : table.cosets()) {
            if (rep != 0) all += set_text(members);
        }
        return all;
    });
    s.guarded("q13-r3/class-factors", "D0{1,17} D1{5,7} E0{2,8} E1{4,14}", [&] {
        const ClassPolySet set = class_polys(sys13, factor_unity(13, 3));
        return "D0" + set_text(set.reps_of(ClassLabel::D0)) + " D1" + set_text(set.reps_of(ClassLabel::D1)) +
               " E0" + set_text(set.reps_of(ClassLabel::E0)) + " E1" + set_text(set.reps_of(ClassLabel::E1));
    });

    // Table of dual-containing codes over F_3, length 22.
    {
        const CyclotomicSystem sys = cyclotomic_classes(11);
        const MinimalPolyTable table = factor_unity(11, 3);
        const ClassPolySet set = class_polys(sys, table);
        const auto row = [&](const std::string& sel, const std::string& primal, const std::string& dual) {
            s.guarded("q11-r3/" + sel, primal + " dual-containing", [&] {
                CyclicCode c(ClassSelector::parse(sel).generator(set), 11);
                c = c.with_distance(min_distance(c, budget));
                return params_text(c) + (is_dual_containing(c) ? " dual-containing" : " not-dual-containing");
            });
            s.guarded("q11-r3/" + sel + "-dual", dual, [&] {
                CyclicCode d = dual_code(CyclicCode(ClassSelector::parse(sel).generator(set), 11));
                return params_text(d.with_distance(min_distance(d, budget)));
            });
        };
        row("D0", "[22,17,2]_3", "[22,5,12]_3");
        row("E0", "[22,17,2]_3", "[22,5,12]_3");
        row("D0E0", "[22,12,7]_3", "[22,10,9]_3");
    }

    s.check("q19-r11/ord_38(11)", "3", std::to_string(element_order(11, 38)));
    s.check("q19-r11/theta", "3", std::to_string(theta(19, 11)));
    s.guarded("q19-r11/chain", "inner [38,32,5]_11 outer [38,35,2]_11 f=M_1 ord 38 dim 26", [] {
        EnumerateOptions opts;
        opts.compute_distances = true;
        const ChainReport chain =
            enumerate_theorem2(19, 11, ClassLabel::D0, ClassLabel::E0, {2, 5, 9, 10}, {1, 2, 5, 9, 10}, opts);
        const MinimalPolyTable table = factor_unity(19, 11);
        const std::string f = chain.f == table.at(1) ? "M_1" : chain.f.to_string();
        return "inner " + params_text(chain.inner) + " outer " + params_text(chain.outer) + " f=" + f + " ord " +
               std::to_string(chain.tolerance) + " dim " + std::to_string(chain.dim);
    });
    s.guarded("q19-r11/margins", "37 accepted, 38 rejected", [] {
        const ChainReport chain =
            enumerate_theorem2(19, 11, ClassLabel::D0, ClassLabel::E0, {2, 5, 9, 10}, {1, 2, 5, 9, 10});
        std::string out = chain.instantiate(20, 17).length == 75 ? "37 accepted" : "37 wrong length";
        try {
            chain.instantiate(20, 18);
            out += ", 38 accepted";
        } catch (const ToleranceExceeded&) {
            out += ", 38 rejected";
        }
        return out;
    });
    return s.finish();
}

void render_table(const json& report, std::ostream& out) { render(report, out, 0, ""); }

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const json rep = report(config);
        if (config.json) {
            out << rep.dump(2) << "\n";
        } else {
            render_table(rep, out);
        }
        if (config.command == Command::Regress && rep.at("failed").get<std::size_t>() > 0) {
            return kExitRegressionFailed;
        }
        return kExitOk;
    } catch (const InvalidArgument& e) {
        err << "error: invalid-argument: " << e.what() << "\n";
        return kExitInvalidArgument;
    } catch (const InvariantViolation& e) {
        err << "error: invariant-violation: " << e.what() << "\n";
        return kExitInvariantViolation;
    } catch (const std::exception& e) {
        err << "error: internal: " << e.what() << "\n";
        return kExitInvariantViolation;
    }
}

}  // namespace qsync::cli
