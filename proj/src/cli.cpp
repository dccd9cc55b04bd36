#include "dtq/cli.hpp"

#include "dtq/hall_engine.hpp"
#include "dtq/invariants.hpp"
#include "dtq/oracle.hpp"
#include "dtq/spec_io.hpp"
#include "dtq/wall_crossing.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <sstream>

namespace dtq {

namespace {

using ordered_json = nlohmann::ordered_json;

enum class Format { tsv, jsonl };

struct Config {
    std::string quiver_path;
    std::string stability = "zero";
    std::string box;
    std::string format = "tsv";
    bool ignore_potential = false;
    std::string from;
    std::string to;
    std::string framing;
    std::string method = "auto";
    bool no_direct = false;
    std::string primes = "2,3";
    long cap = 3;
    std::string demo;
    std::string pairing_values = "5,6,7,8,9,10,11,12";
    int max_multiple = 6;
    std::string chis = "-200,-6,2";
    int max_degree = 8;
    std::string demo_box = "5,5";
};

/// One output record; values are already serialized, flags are booleans.
struct Field {
    std::string name;
    std::string text;
    std::optional<bool> flag;
};

class Emitter {
public:
    Emitter(std::ostream& out, Format format) : out_(out), format_(format) {}

    void row(const std::vector<Field>& fields)
    {
        if (format_ == Format::tsv) {
            if (!header_done_) {
                for (std::size_t i = 0; i < fields.size(); ++i) {
                    out_ << (i ? "\t" : "") << fields[i].name;
                }
                out_ << '\n';
                header_done_ = true;
            }
            for (std::size_t i = 0; i < fields.size(); ++i) {
                out_ << (i ? "\t" : "");
                if (fields[i].flag) {
                    out_ << (*fields[i].flag ? "yes" : "no");
                } else {
                    out_ << fields[i].text;
                }
            }
            out_ << '\n';
            return;
        }
        ordered_json j = ordered_json::object();
        for (const auto& f : fields) {
            if (f.flag) {
                j[f.name] = *f.flag;
            } else {
                j[f.name] = f.text;
            }
        }
        out_ << j.dump() << '\n';
    }

    /// Free-form note: a '#' line in TSV, a {"note": ...} record in JSON lines.
    void note(const std::string& text)
    {
        if (format_ == Format::tsv) {
            out_ << "# " << text << '\n';
        } else {
            out_ << ordered_json{{"note", text}}.dump() << '\n';
        }
    }

    void summary(const std::string& name, bool pass)
    {
        if (format_ == Format::tsv) {
            out_ << "# " << name << ": " << (pass ? "PASS" : "FAIL") << '\n';
        } else {
            out_ << ordered_json{{"summary", name}, {"pass", pass}}.dump() << '\n';
        }
    }

private:
    std::ostream& out_;
    Format format_;
    bool header_done_ = false;
};

Field text(std::string name, std::string value) { return Field{std::move(name), std::move(value), std::nullopt}; }
Field number(std::string name, const Rational& x) { return Field{std::move(name), to_string(x), std::nullopt}; }
Field flag(std::string name, bool b) { return Field{std::move(name), {}, b}; }

std::vector<long> parse_list(const std::string& s)
{
    std::vector<long> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stol(item, &used));
            if (used != item.size()) {
                throw Error("");
            }
        } catch (const std::exception&) {
            throw Error("malformed integer list '" + s + "'");
        }
    }
    if (out.empty()) {
        throw Error("empty integer list");
    }
    return out;
}

DimVector parse_box(const Quiver& q, const std::string& s)
{
    if (s.empty()) {
        throw Error("--box is required");
    }
    const DimVector box = DimVector::parse(s);
    q.check(box);
    if (!box.is_nonnegative()) {
        throw Error("box entries must be nonnegative");
    }
    return box;
}

/// Loads the spec and, unless told to ignore it, rejects a nonzero potential.
QuiverSpec load_for_engine(const Config& cfg, Emitter& emit)
{
    if (cfg.quiver_path.empty()) {
        throw Error("--quiver is required");
    }
    QuiverSpec spec = load_quiver_spec(cfg.quiver_path);
    if (!spec.potential.is_zero()) {
        if (!cfg.ignore_potential) {
            require_no_potential(spec.potential);
        }
        emit.note("potential ignored: values are those of the quiver without relations");
    }
    return spec;
}

int cmd_dt(const Config& cfg, Emitter& emit)
{
    const QuiverSpec spec = load_for_engine(cfg, emit);
    const DimVector box = parse_box(spec.quiver, cfg.box);
    const auto table = dtbar_table(spec.quiver, spec.stability(cfg.stability), box);
    for (const auto& [d, value] : table.values) {
        emit.row({text("class", d.to_string()), number("value", value)});
    }
    return exit_ok;
}

int cmd_bps(const Config& cfg, Emitter& emit)
{
    const QuiverSpec spec = load_for_engine(cfg, emit);
    const DimVector box = parse_box(spec.quiver, cfg.box);
    const Stability s = spec.stability(cfg.stability);
    const auto table = dtbar_table(spec.quiver, s, box);
    const auto bps = bps_from_dtbar(table);
    for (const auto& [d, value] : table.values) {
        const Rational& b = bps.at(d);
        emit.row({text("class", d.to_string()), number("value", value), number("bps", b),
                  flag("integral", is_integer(b))});
    }
    const auto report = integrality_report(bps, spec.quiver, s, box, spec.potential);
    emit.note(std::string("generic: ") + (report.genericity.generic ? "yes" : "no"));
    if (report.genericity.witness) {
        emit.note("genericity witness: " + report.genericity.witness->first.to_string() + " / "
                  + report.genericity.witness->second.to_string());
    }
    emit.note("non-integral entries: " + std::to_string(report.non_integral.size()));
    if (report.violation) {
        emit.summary("integrality", false);
        return exit_check_failed;
    }
    return exit_ok;
}

int cmd_wallcross(const Config& cfg, Emitter& emit)
{
    const QuiverSpec spec = load_for_engine(cfg, emit);
    const DimVector box = parse_box(spec.quiver, cfg.box);
    const Stability from = spec.stability(cfg.from);
    const Stability to = spec.stability(cfg.to);
    const auto source = dtbar_table(spec.quiver, from, box);
    const auto moved = transform_table(spec.quiver, source, from, to, box);
    const auto direct = dtbar_table(spec.quiver, to, box);
    bool pass = true;
    for (const auto& [d, value] : moved.values) {
        const Rational diff = value - direct.at(d);
        pass = pass && sgn(diff) == 0;
        emit.row({text("class", d.to_string()), number("transformed", value), number("direct", direct.at(d)),
                  number("diff", diff)});
    }
    emit.summary("wallcross " + cfg.from + " -> " + cfg.to, pass);
    return pass ? exit_ok : exit_check_failed;
}

int cmd_framed(const Config& cfg, Emitter& emit)
{
    const QuiverSpec spec = load_for_engine(cfg, emit);
    const DimVector box = parse_box(spec.quiver, cfg.box);
    const DimVector e = DimVector::parse(cfg.framing);
    spec.quiver.check(e);
    if (!e.is_nonnegative()) {
        throw Error("framing vector entries must be nonnegative");
    }
    const Stability s = spec.stability(cfg.stability);
    PairMethod method = PairMethod::automatic;
    if (cfg.method == "composition") {
        method = PairMethod::composition;
    } else if (cfg.method == "exponential") {
        method = PairMethod::exponential;
    }
    const auto table = dtbar_table(spec.quiver, s, box);
    const auto pairs = pair_from_dtbar(table, spec.quiver, Framing(e), s, box, method);
    const bool can_check = !cfg.no_direct && spec.potential.is_zero();
    bool pass = true;
    for (const auto& [d, value] : pairs.values) {
        std::string direct = "-";
        std::optional<bool> match;
        if (can_check && d.total() <= oracle_max_total && e.total() <= oracle_max_framing_total) {
            try {
                const Rational x = ndt_direct(spec.quiver, s, d, e);
                direct = to_string(x);
                match = (x == value);
                pass = pass && *match;
            } catch (const SizeCapExceeded&) {
                direct = "-";
            }
        }
        std::vector<Field> row{text("class", d.to_string()), number("ndt", value), text("direct", direct)};
        row.push_back(match ? flag("match", *match) : text("match", "-"));
        emit.row(row);
    }
    emit.summary("framed e=" + e.to_string(), pass);
    return pass ? exit_ok : exit_check_failed;
}

int cmd_verify(const Config& cfg, Emitter& emit)
{
    if (cfg.quiver_path.empty()) {
        throw Error("--quiver is required");
    }
    const QuiverSpec spec = load_quiver_spec(cfg.quiver_path);
    if (cfg.cap < 1 || cfg.cap > oracle_max_total) {
        throw SizeCapExceeded("--cap must lie in [1, " + std::to_string(oracle_max_total) + "]");
    }
    const auto primes = parse_list(cfg.primes);
    const Quiver& q = spec.quiver;
    if (!spec.potential.is_zero()) {
        emit.note("potential ignored: the oracle counts representations of the quiver without relations");
    }
    std::map<std::string, Stability> stabilities = spec.stabilities;
    stabilities.emplace("zero", Stability::trivial(q.vertex_count()));

    DimVector cap_box = DimVector::zero(q.vertex_count());
    for (std::size_t v = 0; v < cap_box.size(); ++v) {
        cap_box[v] = static_cast<int>(cfg.cap);
    }
    std::vector<DimVector> classes;
    for (const auto& d : nonzero_classes_in_box(cap_box)) {
        if (d.total() <= cfg.cap) {
            classes.push_back(d);
        }
    }

    bool pass = true;
    auto record = [&](const std::string& check, const std::string& cls, const std::string& p, const Rational& expected,
                      const Rational& observed) {
        const bool ok = expected == observed;
        pass = pass && ok;
        emit.row({text("check", check), text("class", cls), text("p", p),
                  number("expected", expected), number("observed", observed), flag("pass", ok)});
    };

    for (long p : primes) {
        const int ip = static_cast<int>(p);
        for (const auto& d : classes) {
            record("stacky", d.to_string(), std::to_string(p), eval_at_q(stacky_count_all(q, d), Rational(p)),
                   stacky_count_oracle(q, d, ip));
        }
        for (const auto& [name, s] : stabilities) {
            const HallEngine engine(q, s);
            for (const auto& d : classes) {
                record("semistable:" + name, d.to_string(), std::to_string(p), eval_at_q(engine.semistable_count(d), Rational(p)),
                       semistable_count_oracle(q, s, d, ip));
            }
        }
        for (const auto& d1 : classes) {
            for (const auto& d3 : classes) {
                if ((d1 + d3).total() > cfg.cap) {
                    continue;
                }
                record("hall_twist", d1.to_string() + "|" + d3.to_string(), std::to_string(p), hall_twist_prediction(q, d1, d3, ip),
                       hall_twist_oracle(q, d1, d3, ip));
            }
        }
        std::uint64_t seed = 1;
        for (const auto& d : classes) {
            for (const auto& e : classes) {
                const auto he = hom_ext_oracle(q, random_rep(q, d, ip, seed), random_rep(q, e, ip, seed + 1));
                seed += 2;
                record("euler_form", d.to_string() + "|" + e.to_string(), std::to_string(p), Rational(euler_form_nonsym(q, d, e)),
                       Rational(he.hom - he.ext1));
            }
        }
    }
    for (const auto& [name, s] : stabilities) {
        const auto table = dtbar_table(q, s, cap_box);
        for (std::size_t v = 0; v < q.vertex_count(); ++v) {
            DimVector e = DimVector::zero(q.vertex_count());
            e[v] = 1;
            const auto pairs = pair_from_dtbar(table, q, Framing(e), s, cap_box, PairMethod::composition);
            for (const auto& d : classes) {
                if (d.total() > std::min<long>(cfg.cap, 2)) {
                    continue;
                }
                try {
                    record("framed:" + name + ":e=" + e.to_string(), d.to_string(), "-", pairs.at(d),
                           ndt_direct(q, s, d, e));
                } catch (const SizeCapExceeded&) {
                    emit.note("framed check skipped at " + d.to_string() + ": size cap");
                }
            }
        }
    }
    emit.summary("verify", pass);
    return pass ? exit_ok : exit_check_failed;
}

void emit_demo(const DemoReport& r, Emitter& emit)
{
    for (const auto& row : r.rows) {
        emit.row({text("demo", r.name), text("class", row.cls.to_string()), text("quantity", row.quantity),
                  number("expected", row.expected), number("computed", row.computed), flag("pass", row.pass)});
    }
    for (const auto& n : r.notes) {
        emit.note(n);
    }
}

int cmd_demo(const Config& cfg, Emitter& emit)
{
    bool pass = true;
    if (cfg.demo == "grassmannian") {
        for (long pv : parse_list(cfg.pairing_values)) {
            const auto r = demo_grassmannian(pv, cfg.max_multiple);
            emit_demo(r, emit);
            pass = pass && r.pass;
        }
    } else if (cfg.demo == "hilbert-points") {
        for (long chi : parse_list(cfg.chis)) {
            const auto r = demo_hilbert_points(chi, cfg.max_degree);
            emit_demo(r, emit);
            pass = pass && r.pass;
        }
    } else {
        const auto r = demo_conifold(DimVector::parse(cfg.demo_box));
        emit_demo(r, emit);
        pass = r.pass;
    }
    emit.summary(cfg.demo, pass);
    return pass ? exit_ok : exit_check_failed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Config cfg;
    CLI::App app{"Exact Donaldson-Thomas invariants of quivers", "dtq"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, bool needs_box) {
        sub->add_option("--quiver", cfg.quiver_path, "Quiver spec file");
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"tsv", "jsonl"}));
        if (needs_box) {
            sub->add_option("--box", cfg.box, "Componentwise upper bound, e.g. 2,2");
            sub->add_option("--stability", cfg.stability, "Stability name from the spec file");
            sub->add_flag("--ignore-potential", cfg.ignore_potential, "Treat a nonzero potential as zero");
        }
    };

    auto* dt = app.add_subcommand("dt", "DT-bar table from the Hall engine");
    add_common(dt, true);
    auto* bps = app.add_subcommand("bps", "DT-bar and BPS table with integrality report");
    add_common(bps, true);
    auto* wc = app.add_subcommand("wallcross", "Wall-crossing transform against direct recomputation");
    add_common(wc, true);
    wc->add_option("--from", cfg.from, "Source stability")->required();
    wc->add_option("--to", cfg.to, "Target stability")->required();
    auto* framed = app.add_subcommand("framed", "Framed invariants with an optional brute-force cross-check");
    add_common(framed, true);
    framed->add_option("--e", cfg.framing, "Framing vector")->required();
    framed->add_option("--method", cfg.method, "Pair identity evaluation")
        ->check(CLI::IsMember({"auto", "composition", "exponential"}));
    framed->add_flag("--no-direct", cfg.no_direct, "Skip the finite-field cross-check");
    auto* verify = app.add_subcommand("verify", "Finite-field oracle suite");
    add_common(verify, false);
    verify->add_option("--p", cfg.primes, "Comma-separated primes");
    verify->add_option("--cap", cfg.cap, "Largest total dimension");
    auto* demo = app.add_subcommand("demo", "Closed-form demonstrations");
    demo->add_option("name", cfg.demo, "Demo name")
        ->required()
        ->check(CLI::IsMember({"grassmannian", "hilbert-points", "conifold"}));
    demo->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"tsv", "jsonl"}));
    demo->add_option("--P", cfg.pairing_values, "Grassmannian pairing values");
    demo->add_option("--max-m", cfg.max_multiple, "Grassmannian largest multiple");
    demo->add_option("--chi", cfg.chis, "Hilbert-points Euler characteristics");
    demo->add_option("--max-d", cfg.max_degree, "Hilbert-points truncation degree");
    demo->add_option("--box", cfg.demo_box, "Conifold box");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_error;
    }

    Emitter emit(out, cfg.format == "jsonl" ? Format::jsonl : Format::tsv);
    try {
        if (dt->parsed()) {
            return cmd_dt(cfg, emit);
        }
        if (bps->parsed()) {
            return cmd_bps(cfg, emit);
        }
        if (wc->parsed()) {
            return cmd_wallcross(cfg, emit);
        }
        if (framed->parsed()) {
            return cmd_framed(cfg, emit);
        }
        if (verify->parsed()) {
            return cmd_verify(cfg, emit);
        }
        return cmd_demo(cfg, emit);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }
}

}  // namespace dtq
