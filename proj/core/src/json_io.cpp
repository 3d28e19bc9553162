#include "qtoda/json_io.hpp"

#include <json.hpp>

namespace qtoda {

using json = nlohmann::ordered_json;

namespace {

json integer_json(const mpz_class& z)
{
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

mpz_class integer_from(const json& j)
{
    if (j.is_string()) return mpz_class(j.get<std::string>());
    return mpz_class(j.get<long>());
}

json scalar_json(const LaurentQK& s)
{
    json arr = json::array();
    for (const auto& [m, c] : s.terms()) {
        json t = {m.q2, m.k, integer_json(c.get_num()), integer_json(c.get_den())};
        if (m.g != 0 || m.t != 0) {
            t.push_back(m.g);
            t.push_back(m.t);
        }
        arr.push_back(std::move(t));
    }
    return arr;
}

LaurentQK scalar_from(const json& j)
{
    LaurentQK out;
    for (const auto& t : j) {
        if (t.size() != 4 && t.size() != 6) throw Error("scalar term must have 4 or 6 entries");
        ScalarMonomial m{t[0].get<int>(), t[1].get<int>(), 0, 0};
        if (t.size() == 6) {
            m.g = t[4].get<int>();
            m.t = t[5].get<int>();
        }
        Rational c(integer_from(t[2]), integer_from(t[3]));
        c.canonicalize();
        out += LaurentQK::monomial(c, m);
    }
    return out;
}

json poly_json(const TorusPoly& p)
{
    json arr = json::array();
    for (const auto& [e, c] : p.terms()) {
        json t;
        t["exp"] = e;
        t["coeff"] = scalar_json(c);
        arr.push_back(std::move(t));
    }
    return arr;
}

TorusPoly poly_from(const json& j, int N)
{
    TorusPoly p(N);
    for (const auto& t : j) {
        auto e = t.at("exp").get<ExpVector>();
        if (static_cast<int>(e.size()) != N) throw Error("exponent has wrong length");
        p.add_term(e, scalar_from(t.at("coeff")));
    }
    return p;
}

json parse(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace

std::string to_json(const LaurentQK& s)
{
    return scalar_json(s).dump();
}

std::string to_json(const TorusPoly& p)
{
    return poly_json(p).dump();
}

std::string to_json(const DiffOp& a, int indent)
{
    json j;
    j["N"] = a.dim();
    j["mode"] = to_string(a.mode());
    json terms = json::array();
    for (const auto& [mu, f] : a.terms()) {
        json t;
        t["shift"] = mu;
        t["num"] = poly_json(f.num());
        t["den"] = poly_json(f.den());
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j.dump(indent);
}

std::string to_json(const DifferentialOp& a, int indent)
{
    json j;
    j["N"] = a.dim();
    json terms = json::array();
    for (const auto& [d, c] : a.terms()) {
        json t;
        t["deriv"] = d;
        t["coeff"] = poly_json(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j.dump(indent);
}

std::string to_json(const std::vector<NCWord>& words, int indent)
{
    json arr = json::array();
    for (const auto& w : words) {
        json t;
        t["coeff"] = scalar_json(w.coeff);
        t["preWeight"] = w.pre_weight;
        t["fIndices"] = w.f_indices;
        t["eIndices"] = w.e_indices;
        t["postWeight"] = w.post_weight;
        t["zDegree"] = w.z_degree;
        arr.push_back(std::move(t));
    }
    return arr.dump(indent);
}

std::string to_json(const RepData& rep, int indent)
{
    json j;
    j["N"] = rep.N;
    j["k"] = rep.k;
    j["affine"] = rep.affine;
    j["basis"] = rep.basis;
    j["weights"] = rep.weight;
    json q2rho = json::array();
    for (const auto& s : rep.q2rho) q2rho.push_back(scalar_json(s));
    j["q2rho"] = std::move(q2rho);
    auto actions = [&](const std::map<int, std::vector<RepAction>>& table) {
        json out = json::object();
        for (const auto& [node, acts] : table) {
            json list = json::array();
            for (const auto& a : acts)
                list.push_back({{"from", rep.basis[a.from]}, {"to", rep.basis[a.to]},
                                {"coeff", scalar_json(a.coeff)}, {"zDegree", a.zdeg}});
            out[std::to_string(node)] = std::move(list);
        }
        return out;
    };
    j["e"] = actions(rep.e);
    j["f"] = actions(rep.f);
    return j.dump(indent);
}

LaurentQK laurent_from_json(const std::string& text)
{
    return scalar_from(parse(text));
}

TorusPoly torus_poly_from_json(const std::string& text, int N)
{
    return poly_from(parse(text), N);
}

DiffOp diffop_from_json(const std::string& text)
{
    json j = parse(text);
    try {
        const int N = j.at("N").get<int>();
        DiffOp op(N, mode_from_string(j.at("mode").get<std::string>()));
        for (const auto& t : j.at("terms")) {
            auto mu = t.at("shift").get<ShiftVector>();
            op.add_term(mu, TorusRat(poly_from(t.at("num"), N), poly_from(t.at("den"), N)));
        }
        return op;
    } catch (const json::exception& e) {
        throw Error(std::string("invalid operator JSON: ") + e.what());
    }
}

DifferentialOp differential_op_from_json(const std::string& text)
{
    json j = parse(text);
    try {
        const int N = j.at("N").get<int>();
        DifferentialOp op(N);
        for (const auto& t : j.at("terms")) op.add_term(t.at("deriv").get<std::vector<int>>(), poly_from(t.at("coeff"), N));
        return op;
    } catch (const json::exception& e) {
        throw Error(std::string("invalid differential operator JSON: ") + e.what());
    }
}

}  // namespace qtoda
