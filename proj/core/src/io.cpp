#include "shadowgauge/io.hpp"

#include <string>
#include <vector>

#include "shadowgauge/error.hpp"

namespace shadowgauge {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what)
{
    throw Error(Errc::parse_error, what);
}

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        parse_fail(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

double number(const json& j, const char* what)
{
    if (!j.is_number())
        parse_fail(std::string(what) + " must be a number");
    return j.get<double>();
}

int dimension(const json& j)
{
    const json& d = field(j, "dim");
    if (!d.is_number_integer() || d.get<int>() < 1)
        parse_fail("\"dim\" must be a positive integer");
    return d.get<int>();
}

Vector vector_of(const json& j, int dim, const char* what)
{
    if (!j.is_array())
        parse_fail(std::string(what) + " must be an array");
    if (static_cast<int>(j.size()) != dim)
        parse_fail(std::string(what) + " has " + std::to_string(j.size()) + " entries, expected " +
                   std::to_string(dim));
    Vector v(dim);
    for (int i = 0; i < dim; ++i)
        v[i] = number(j[static_cast<std::size_t>(i)], what);
    return v;
}

std::vector<Vector> vectors_of(const json& j, int dim, const char* what)
{
    if (!j.is_array())
        parse_fail(std::string(what) + " must be an array of arrays");
    std::vector<Vector> out;
    out.reserve(j.size());
    for (const auto& row : j)
        out.push_back(vector_of(row, dim, what));
    return out;
}

json vector_json(const Vector& v)
{
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        a.push_back(v[i]);
    return a;
}

} // namespace

Body body_from_json(const json& j)
{
    const json& type = field(j, "type");
    if (!type.is_string())
        parse_fail("\"type\" must be a string");
    const std::string kind = type.get<std::string>();
    const int dim = dimension(j);

    if (kind == "zonotope") {
        return Zonotope(dim, vectors_of(field(j, "generators"), dim, "generator"));
    }
    if (kind == "ball") {
        return Ball(dim, number(field(j, "radius"), "radius"));
    }
    if (kind == "cross_polytope") {
        return make_cross_polytope(dim, number(field(j, "scale"), "scale"));
    }
    if (kind == "facet_body") {
        auto vertices = vectors_of(field(j, "vertices"), dim, "vertex");
        const json& atoms = field(j, "atoms");
        if (!atoms.is_array())
            parse_fail("\"atoms\" must be an array");
        std::vector<FacetData> facets;
        facets.reserve(atoms.size());
        for (const auto& atom : atoms) {
            const Vector u = vector_of(field(atom, "u"), dim, "atom normal");
            facets.push_back(FacetData{Direction::normalized(u), number(field(atom, "a"), "atom a"),
                                       number(field(atom, "h"), "atom h")});
        }
        return FacetBody(dim, std::move(vertices), facets);
    }
    parse_fail("unknown body type \"" + kind + "\"");
}

json body_to_json(const Body& body)
{
    json j;
    j["type"] = body.kind();
    j["dim"] = body.dim();
    if (body.is<Zonotope>()) {
        const Matrix& g = body.as<Zonotope>().generators();
        json gens = json::array();
        for (Eigen::Index c = 0; c < g.cols(); ++c)
            gens.push_back(vector_json(g.col(c)));
        j["generators"] = std::move(gens);
    } else if (body.is<Ball>()) {
        j["radius"] = body.as<Ball>().radius;
    } else {
        const auto& f = body.as<FacetBody>();
        json verts = json::array();
        for (const auto& v : f.vertices())
            verts.push_back(vector_json(v));
        json atoms = json::array();
        const auto measure_atoms = f.measure().atoms();
        for (std::size_t i = 0; i < measure_atoms.size(); ++i) {
            atoms.push_back({{"u", vector_json(measure_atoms[i].u.coords())},
                             {"a", measure_atoms[i].a},
                             {"h", f.offsets()[i]}});
        }
        j["vertices"] = std::move(verts);
        j["atoms"] = std::move(atoms);
    }
    return j;
}

json cross_polytope_json(int dim, double scale)
{
    return {{"type", "cross_polytope"}, {"dim", dim}, {"scale", scale}};
}

json direction_to_json(const Direction& d)
{
    return vector_json(d.coords());
}

json report_to_json(const CheckReport& r)
{
    json j;
    j["name"] = to_string(r.name);
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["gap"] = r.gap;
    j["epsilon_star"] = r.epsilon_star ? json(*r.epsilon_star) : json(nullptr);
    j["witness_xi"] = r.witness_xi ? direction_to_json(*r.witness_xi) : json(nullptr);
    j["passed"] = r.passed;
    j["verdict"] = to_string(r.verdict);
    j["tolerances"] = {{"tol_rel", r.tolerances.tol_rel},
                       {"coarse_samples", r.tolerances.coarse_samples},
                       {"restarts", r.tolerances.restarts},
                       {"shrink_tol", r.tolerances.shrink_tol},
                       {"refined", r.tolerances.refined}};
    if (!r.note.empty())
        j["note"] = r.note;
    return j;
}

} // namespace shadowgauge
