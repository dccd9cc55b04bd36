#include "dtq/spec_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace dtq {

using nlohmann::json;

namespace {

Rational rational_field(const json& j, const std::string& where)
{
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const Error& e) {
            throw SpecParseError(where + ": " + e.what());
        }
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    throw SpecParseError(where + ": expected an integer or a \"p/q\" string");
}

const json& required(const json& j, const char* key)
{
    auto it = j.find(key);
    if (it == j.end()) {
        throw SpecParseError(std::string("missing key '") + key + "'");
    }
    return *it;
}

std::vector<Rational> per_vertex(const Quiver& q, const json& j, const Rational& fallback, const std::string& where)
{
    std::vector<Rational> out(q.vertex_count(), fallback);
    if (j.is_null()) {
        return out;
    }
    if (!j.is_object()) {
        throw SpecParseError(where + ": expected an object keyed by vertex name");
    }
    for (const auto& [name, value] : j.items()) {
        std::size_t v = 0;
        try {
            v = q.vertex_index(name);
        } catch (const Error&) {
            throw SpecParseError(where + ": unknown vertex '" + name + "'");
        }
        out[v] = rational_field(value, where + "." + name);
    }
    return out;
}

}  // namespace

Stability QuiverSpec::stability(const std::string& name) const
{
    auto it = stabilities.find(name);
    if (it != stabilities.end()) {
        return it->second;
    }
    if (name == "zero") {
        return Stability::trivial(quiver.vertex_count());
    }
    throw SpecParseError("unknown stability '" + name + "'");
}

QuiverSpec parse_quiver_spec(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SpecParseError(std::string("invalid quiver spec: ") + e.what());
    }
    if (!doc.is_object()) {
        throw SpecParseError("quiver spec must be a JSON object");
    }
    try {
        const auto vertices = required(doc, "vertices").get<std::vector<std::string>>();
        std::vector<std::tuple<std::string, std::string, std::string>> arrows;
        for (const auto& a : required(doc, "arrows")) {
            if (!a.is_array() || a.size() != 3) {
                throw SpecParseError("each arrow must be [tail, head, label]");
            }
            arrows.emplace_back(a[0].get<std::string>(), a[1].get<std::string>(), a[2].get<std::string>());
        }
        QuiverSpec spec{Quiver::from_names(vertices, arrows), {}, {}};

        if (auto it = doc.find("potential"); it != doc.end()) {
            std::vector<PotentialTerm> terms;
            for (const auto& t : *it) {
                terms.push_back(PotentialTerm{rational_field(required(t, "coeff"), "potential.coeff"),
                                              required(t, "cycle").get<Path>()});
            }
            spec.potential = Superpotential(spec.quiver, std::move(terms));
        }
        if (auto it = doc.find("stabilities"); it != doc.end()) {
            for (const auto& [name, body] : it->items()) {
                const std::string where = "stabilities." + name;
                auto c = per_vertex(spec.quiver, body.value("c", json()), Rational(0), where + ".c");
                auto r = per_vertex(spec.quiver, body.value("r", json()), Rational(1), where + ".r");
                try {
                    spec.stabilities.emplace(name, Stability(std::move(c), std::move(r)));
                } catch (const Error& e) {
                    throw SpecParseError(where + ": " + e.what());
                }
            }
        }
        return spec;
    } catch (const json::exception& e) {
        throw SpecParseError(std::string("invalid quiver spec: ") + e.what());
    } catch (const SpecParseError&) {
        throw;
    } catch (const Error& e) {
        throw SpecParseError(std::string("invalid quiver spec: ") + e.what());
    }
}

QuiverSpec load_quiver_spec(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw SpecParseError("cannot open quiver spec '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_quiver_spec(buf.str());
}

std::string dump_quiver_spec(const QuiverSpec& spec)
{
    const auto& q = spec.quiver;
    json doc;
    doc["vertices"] = q.vertices();
    doc["arrows"] = json::array();
    for (const auto& a : q.arrows()) {
        doc["arrows"].push_back({q.vertices()[a.tail], q.vertices()[a.head], a.label});
    }
    if (!spec.potential.terms().empty()) {
        doc["potential"] = json::array();
        for (const auto& t : spec.potential.terms()) {
            doc["potential"].push_back({{"coeff", to_string(t.coeff)}, {"cycle", t.cycle}});
        }
    }
    if (!spec.stabilities.empty()) {
        json st = json::object();
        for (const auto& [name, s] : spec.stabilities) {
            json c = json::object();
            json r = json::object();
            for (std::size_t v = 0; v < q.vertex_count(); ++v) {
                c[q.vertices()[v]] = to_string(s.c()[v]);
                r[q.vertices()[v]] = to_string(s.r()[v]);
            }
            st[name] = {{"c", c}, {"r", r}};
        }
        doc["stabilities"] = st;
    }
    return doc.dump(2) + "\n";
}

}  // namespace dtq
