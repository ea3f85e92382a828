#include "trilie/runner.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "trilie/dgla.hpp"
#include "trilie/fundamental.hpp"
#include "trilie/rep.hpp"

namespace trilie {

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

enum Severity { kOk = 0, kSkipped = 1, kDiscrepancy = 2, kFail = 3 };

const char* severity_name(int s) {
    switch (s) {
        case kOk: return "ok";
        case kSkipped: return "skipped";
        case kDiscrepancy: return "corpus-discrepancy";
        default: return "fail";
    }
}

struct Outcome {
    int severity = kOk;
    std::string detail;
};

void worse(Outcome& agg, Outcome o) {
    if (o.severity > agg.severity) agg = std::move(o);
}

struct SampleCtx {
    const RunOptions& opt;
    std::size_t sample_index = 0;
};

template <std::size_t N>
std::string witness_names(const std::vector<std::string>& names,
                          const std::array<std::size_t, N>& w) {
    std::string out = "(";
    for (std::size_t t = 0; t < N; ++t) {
        if (t) out += ",";
        out += names[w[t]];
    }
    return out + ")";
}

// sector names look like "fi-ggghh"; the letters say which space each witness
// index points into
std::string sector_witness(const ExtensionDatum& D, const SectorVerdict& s) {
    std::string out = "(";
    for (std::size_t t = 0; t < 5; ++t) {
        if (t) out += ",";
        const char c = s.name[3 + t];
        out += (c == 'g') ? D.g.names[s.witness[t]] : D.h.names[s.witness[t]];
    }
    return out + ")";
}

std::string first_sector(const ExtensionDatum& D, const ExtensionVerdict& v) {
    for (const auto& s : v.sectors)
        if (!s.pass) return "sector " + s.name + " at " + sector_witness(D, s);
    return "no failing sector";
}

Outcome t_3lie(const Resolved& r) {
    if (r.ternary.empty()) return {kOk, "nothing to check"};
    for (const auto& A : r.ternary) {
        const auto v = is_three_lie(A);
        if (!v.pass)
            return {kFail,
                    "space " + A.space + ": identity fails at " + witness_names(A.names, v.witness)};
    }
    return {};
}

Outcome t_leibniz(const Resolved& r) {
    if (r.ternary.empty() && r.binary.empty()) return {kOk, "nothing to check"};
    for (const auto& L : r.binary) {
        const auto v = is_leibniz(L);
        if (!v.pass)
            return {kFail,
                    "space " + L.space + ": identity fails at " + witness_names(L.names, v.witness)};
    }
    for (const auto& A : r.ternary) {
        const LeibnizAlgebra F = fundamental_leibniz(A);
        const auto v = is_leibniz(F);
        if (!v.pass)
            return {kFail, "fundamental algebra of " + A.space + ": identity fails at " +
                               witness_names(F.names, v.witness)};
    }
    return {};
}

Outcome t_rep(const Resolved& r) {
    if (r.ternary.empty()) return {kOk, "nothing to check"};
    for (const auto& A : r.ternary) {
        const Representation R = adjoint_rep(A);
        const auto v = rep_defects(R);
        if (!v.pass)
            return {kFail, "adjoint action of " + A.space + ": " + v.rule + " fails at " +
                               witness_names(A.names, v.witness) + " on " +
                               R.module_names[v.column]};
    }
    return {};
}

Outcome t_extension(const Resolved& r) {
    if (r.extensions.empty()) return {kOk, "nothing to check"};
    Outcome agg;
    for (const auto& re : r.extensions) {
        const auto ev = extension_defects(re.datum);
        const ThreeLieAlgebra E = extension_bracket(re.datum);
        const auto fi = is_three_lie(E);
        if (ev.pass && fi.pass) continue;
        if (!ev.pass && !fi.pass)
            worse(agg, {kDiscrepancy, "extension " + re.name + ": " + first_sector(re.datum, ev) +
                                          "; assembled identity fails at " +
                                          witness_names(E.names, fi.witness)});
        else
            worse(agg, {kFail, "extension " + re.name +
                                   ": compatibility equations and assembled identity disagree"});
    }
    return agg;
}

Outcome t_mc(const Resolved& r) {
    if (r.extensions.empty()) return {kOk, "nothing to check"};
    Outcome agg;
    for (const auto& re : r.extensions) {
        const bool mc = graded_is_zero(mc_defect(datum_to_cochain(re.datum)));
        const auto ev = extension_defects(re.datum);
        if (mc && ev.pass) continue;
        if (!mc && !ev.pass)
            worse(agg, {kDiscrepancy, "extension " + re.name +
                                          ": Maurer-Cartan defect nonzero and " +
                                          first_sector(re.datum, ev)});
        else
            worse(agg, {kFail, "extension " + re.name +
                                   ": Maurer-Cartan and compatibility verdicts disagree"});
    }
    return agg;
}

Outcome t_gauge(const Resolved& r, const SampleCtx& ctx) {
    if (r.extensions.empty()) return {kOk, "nothing to check"};
    Outcome agg;
    for (const auto& re : r.extensions) {
        const ExtensionDatum& D = re.datum;
        const GradedCochain c = datum_to_cochain(D);
        if (!graded_is_zero(mc_defect(c))) {
            worse(agg, {kSkipped, "not-mc: extension " + re.name});
            continue;
        }
        const std::size_t gd = D.g.dim, hd = D.h.dim, dim = c.ambient.dim;
        SplitMix64 rng(ctx.opt.seed ^ fnv1a64("gauge") ^ fnv1a64(re.name) ^
                       (kGolden * static_cast<std::uint64_t>(ctx.sample_index + 1)));
        GradedCochain xi = zero_graded(c.ambient, gd, 0);
        for (std::size_t z = 0; z < gd; ++z)
            for (std::size_t t = gd; t < dim; ++t)
                xi.table[z][t] = Scalar(static_cast<long>(rng.next() % 7) - 3);

        const GradedCochain c2 = gauge_transform(xi, c);
        if (!graded_is_zero(mc_defect(c2))) {
            worse(agg, {kFail, "extension " + re.name +
                                   ": orbit image has a nonzero Maurer-Cartan defect"});
            continue;
        }
        ExtensionDatum D2;
        try {
            D2 = cochain_to_datum(c2);
        } catch (const std::domain_error&) {
            worse(agg, {kFail, "extension " + re.name + ": orbit image is not extension data"});
            continue;
        }
        LinearMap xim = zero_map(D.g.space, gd, D.h.space, hd);
        for (std::size_t i = 0; i < gd; ++i)
            for (std::size_t a = 0; a < hd; ++a) xim.cols[i][a] = xi.table[i][gd + a];
        const IsoVerdict iso = is_extension_isomorphism(xim, D, D2);
        if (!iso.pass) {
            worse(agg, {kFail, "extension " + re.name + ": condition " + iso.condition +
                                   " fails at (" + std::to_string(iso.witness[0]) + "," +
                                   std::to_string(iso.witness[1]) + "," +
                                   std::to_string(iso.witness[2]) + ")"});
            continue;
        }
        const TripleVerdict th = theta_morphism_check(xim, D, D2);
        if (!th.pass) {
            worse(agg, {kFail, "extension " + re.name + ": theta is not a morphism at " +
                                   witness_names(c.ambient.names, th.witness)});
            continue;
        }
        const GradedCochain a3 = nr_bracket(xi, nr_bracket(xi, nr_bracket(xi, c)));
        const GradedCochain b3 =
            nr_bracket(xi, nr_bracket(xi, nr_bracket(xi, dgla_differential(xi))));
        if (!graded_is_zero(a3) || !graded_is_zero(b3))
            worse(agg,
                  {kFail, "extension " + re.name + ": the orbit series does not terminate"});
    }
    return agg;
}

Outcome t_fundamental(const Resolved& r) {
    if (r.extensions.empty()) return {kOk, "nothing to check"};
    Outcome agg;
    for (const auto& re : r.extensions) {
        if (!extension_defects(re.datum).pass) {
            worse(agg, {kSkipped, "not-certified: extension " + re.name});
            continue;
        }
        const TransportVerdict tv = fundamental_oracle_check(re.datum);
        if (!tv.pass) {
            const ThreeLieAlgebra E = extension_bracket(re.datum);
            auto wedge_name = [&](std::size_t m) {
                const auto ij = pair_unrank(E.dim, m);
                return E.names[ij[0]] + "^" + E.names[ij[1]];
            };
            worse(agg, {kFail, "extension " + re.name + ": transport mismatch at [" +
                                   wedge_name(tv.witness[0]) + ", " + wedge_name(tv.witness[1]) +
                                   "]"});
            continue;
        }
        const LeibnizAlgebra wb = w_bracket(re.datum);
        const auto lv = is_leibniz(wb);
        if (!lv.pass)
            worse(agg, {kFail, "extension " + re.name +
                                   ": bracket on W fails the Leibniz identity at " +
                                   witness_names(wb.names, lv.witness)});
    }
    return agg;
}

Outcome t_roundtrip(const Resolved& r) {
    if (r.extensions.empty()) return {kOk, "nothing to check"};
    Outcome agg;
    for (const auto& re : r.extensions) {
        const GradedCochain c = datum_to_cochain(re.datum);
        if (!is_restricted(c)) {
            worse(agg, {kFail, "extension " + re.name + ": packaged element is not restricted"});
            continue;
        }
        ExtensionDatum back;
        try {
            back = cochain_to_datum(c);
        } catch (const std::domain_error&) {
            worse(agg, {kFail, "extension " + re.name + ": packaged element does not unpack"});
            continue;
        }
        if (!datum_equal(re.datum, back))
            worse(agg,
                  {kFail, "extension " + re.name + ": unpacking does not reproduce the data"});
    }
    return agg;
}

Outcome run_task(const std::string& task, const Resolved& r, const SampleCtx& ctx) {
    if (task == "check-3lie") return t_3lie(r);
    if (task == "check-leibniz") return t_leibniz(r);
    if (task == "check-rep") return t_rep(r);
    if (task == "check-extension") return t_extension(r);
    if (task == "check-mc") return t_mc(r);
    if (task == "check-gauge") return t_gauge(r, ctx);
    if (task == "check-fundamental-ext") return t_fundamental(r);
    return t_roundtrip(r);
}

std::vector<std::map<std::string, Scalar>> draw_samples(const Problem& prob,
                                                        const RunOptions& opt) {
    std::vector<std::string> unpinned;
    for (const auto& name : prob.params)
        if (!opt.pinned.count(name)) unpinned.push_back(name);

    std::vector<std::map<std::string, Scalar>> out;
    if (unpinned.empty()) {
        out.push_back(opt.pinned);
        return out;
    }
    for (std::size_t i = 0; i < opt.samples; ++i) {
        SplitMix64 rng(opt.seed ^ fnv1a64(prob.basename) ^
                       (kGolden * static_cast<std::uint64_t>(i + 1)));
        bool accepted = false;
        for (int attempt = 0; attempt < 1000 && !accepted; ++attempt) {
            std::map<std::string, Scalar> a = opt.pinned;
            for (const auto& name : unpinned)
                a[name] = Scalar(static_cast<long>(rng.next() % 11) - 5);
            accepted = true;
            for (const auto& [text, ast] : prob.guards) {
                (void)text;
                Scalar v;
                try {
                    v = eval_expr(*ast, a);
                } catch (const std::invalid_argument&) {
                    accepted = false;
                    break;
                }
                if (v == 0) {
                    accepted = false;
                    break;
                }
            }
            if (accepted) out.push_back(std::move(a));
        }
        if (!accepted)
            throw ProblemError(prob.basename + ": could not satisfy the guards after 1000 draws (sample " +
                               std::to_string(i + 1) + ")");
    }
    return out;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i];
    }
    return out;
}

}  // namespace

RunResult run_file(const std::string& path, const RunOptions& opt) {
    const Problem prob = load_problem(path);

    std::vector<std::string> tasks = opt.tasks.empty() ? prob.tasks : opt.tasks;
    if (tasks.empty()) tasks = known_tasks();
    for (const auto& t : tasks) {
        bool ok = false;
        for (const auto& k : known_tasks()) ok = ok || k == t;
        if (!ok) throw ProblemError("unknown task '" + t + "'");
    }
    for (const auto& [name, value] : opt.pinned) {
        (void)value;
        bool known = false;
        for (const auto& q : prob.params) known = known || q == name;
        if (!known) throw ProblemError(prob.basename + ": unknown parameter '" + name + "'");
    }
    if (opt.samples == 0) throw ProblemError("samples must be positive");

    const auto assigns = draw_samples(prob, opt);
    std::vector<Resolved> resolved;
    resolved.reserve(assigns.size());
    for (const auto& a : assigns) resolved.push_back(resolve_problem(prob, a));

    const bool multi = assigns.size() > 1;
    std::vector<Outcome> rows(tasks.size());
    for (std::size_t ti = 0; ti < tasks.size(); ++ti) {
        for (std::size_t s = 0; s < assigns.size(); ++s) {
            Outcome o = run_task(tasks[ti], resolved[s], SampleCtx{opt, s});
            if (multi && o.severity > kOk)
                o.detail += " [sample " + std::to_string(s + 1) + "]";
            worse(rows[ti], std::move(o));
        }
        if (rows[ti].severity == kOk && rows[ti].detail.empty()) {
            if (prob.params.empty())
                rows[ti].detail = "pass";
            else
                rows[ti].detail = "family-pass(" + std::to_string(assigns.size()) +
                                  "); verified at " + std::to_string(assigns.size()) +
                                  (assigns.size() == 1 ? " rational point" : " rational points");
        }
    }

    RunResult res;
    for (const auto& row : rows)
        if (row.severity >= kDiscrepancy) res.exit_code = 1;

    std::ostringstream out;
    out << std::hex;
    if (opt.machine) {
        out << "header\tinfo\tfile=" << prob.basename << " seed=0x" << opt.seed << std::dec
            << " samples=" << assigns.size() << " tasks=" << join(tasks, ",") << "\n";
        if (!prob.params.empty()) {
            for (std::size_t s = 0; s < assigns.size(); ++s) {
                out << "sample\tinfo\t" << (s + 1) << ":";
                for (const auto& name : prob.params)
                    out << " " << name << "=" << assigns[s].at(name).get_str();
                out << "\n";
            }
        }
        for (std::size_t ti = 0; ti < tasks.size(); ++ti)
            out << tasks[ti] << "\t" << severity_name(rows[ti].severity) << "\t"
                << rows[ti].detail << "\n";
    } else {
        out << "trilie report\n";
        out << "file: " << prob.basename << "\n";
        out << "seed: 0x" << opt.seed << std::dec << "\n";
        out << "samples: " << assigns.size() << "\n";
        out << "tasks: " << join(tasks, ", ") << "\n";
        if (!prob.params.empty()) {
            for (std::size_t s = 0; s < assigns.size(); ++s) {
                out << "sample " << (s + 1) << ":";
                for (const auto& name : prob.params)
                    out << " " << name << "=" << assigns[s].at(name).get_str();
                out << "\n";
            }
        }
        for (std::size_t ti = 0; ti < tasks.size(); ++ti) {
            out << tasks[ti] << ": " << severity_name(rows[ti].severity);
            if (!rows[ti].detail.empty()) out << " (" << rows[ti].detail << ")";
            out << "\n";
        }
        out << "result: " << (res.exit_code == 0 ? "pass" : "failure") << "\n";
    }
    res.report = out.str();
    return res;
}

}  // namespace trilie
