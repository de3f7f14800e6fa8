#include "hlr/json_io.hpp"

namespace hlr {

json rat_to_json(const Rat& r) { return to_string(r); }

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw InputError("expected an integer or a \"p/q\" string, got " + j.dump());
}

json vec_to_json(const RatVec& v) {
    json out = json::array();
    for (int i = 0; i < v.dim(); ++i) out.push_back(rat_to_json(v[i]));
    return out;
}

RatVec vec_from_json(const json& j) {
    if (!j.is_array()) throw InputError("expected an array for a vector");
    RatVec v(static_cast<int>(j.size()));
    for (int i = 0; i < v.dim(); ++i) v[i] = rat_from_json(j[static_cast<size_t>(i)]);
    return v;
}

json mat_to_json(const RatMat& m) {
    json out = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(rat_to_json(m.at(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

RatMat mat_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw InputError("expected a non-empty array of rows");
    const int rows = static_cast<int>(j.size());
    const int cols = static_cast<int>(j[0].size());
    RatMat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = j[static_cast<size_t>(i)];
        if (static_cast<int>(row.size()) != cols) throw InputError("ragged matrix rows");
        for (int k = 0; k < cols; ++k) m.at(i, k) = rat_from_json(row[static_cast<size_t>(k)]);
    }
    return m;
}

LatticeInput lattice_from_json(const json& j) {
    if (!j.is_object()) throw InputError("lattice input must be a JSON object");
    LatticeInput in;
    if (j.contains("gram")) {
        in.gram = mat_from_json(j["gram"]);
    } else if (j.contains("basis")) {
        RatMat b = mat_from_json(j["basis"]);
        if (b.rows != b.cols) throw InputError("basis must be square");
        in.gram = RatMat(b.rows, b.rows);
        for (int i = 0; i < b.rows; ++i)
            for (int k = 0; k < b.rows; ++k) {
                Rat s = 0;
                for (int c = 0; c < b.cols; ++c) s += b.at(i, c) * b.at(k, c);
                in.gram.at(i, k) = s;
            }
    } else {
        throw InputError("lattice input needs a \"gram\" or \"basis\" field");
    }
    if (!in.gram.is_square()) throw InputError("gram matrix must be square");
    if (j.contains("n") && j["n"].get<int>() != in.gram.rows)
        throw InputError("field \"n\" disagrees with the matrix size");
    if (j.contains("name")) in.name = j["name"].get<std::string>();
    return in;
}

json polytope_to_json(const Polytope& p) {
    json out;
    json hs = json::array();
    for (const auto& h : p.facets()) {
        json one;
        one["l"] = vec_to_json(h.functional);
        one["b"] = rat_to_json(h.offset);
        hs.push_back(std::move(one));
    }
    out["halfspaces"] = std::move(hs);
    json vs = json::array();
    for (const auto& v : p.vertices()) vs.push_back(vec_to_json(v));
    out["vertices"] = std::move(vs);
    return out;
}

static json verdict_to_json(const EqualityVerdict& v) {
    json out;
    if (v.type == EqualityVerdict::Type::Equality) {
        out["type"] = "Equality";
        json axes = json::array();
        for (const auto& a : v.semi_axes_sq) axes.push_back(rat_to_json(a));
        out["semi_axes_sq"] = std::move(axes);
        out["k"] = v.k;
        json verts = json::array();
        for (const auto& w : v.delaunay_vertices) verts.push_back(vec_to_json(w.to_vec()));
        out["delaunay_vertices"] = std::move(verts);
    } else {
        out["type"] = "Strict";
        out["gap"] = rat_to_json(v.gap);
        out["first_fail"] = v.first_fail;
        out["k"] = v.k;
    }
    return out;
}

static EqualityVerdict verdict_from_json(const json& j) {
    EqualityVerdict v;
    if (j.at("type").get<std::string>() == "Equality") {
        v.type = EqualityVerdict::Type::Equality;
        for (const auto& a : j.at("semi_axes_sq")) v.semi_axes_sq.push_back(rat_from_json(a));
        v.k = j.at("k").get<std::size_t>();
        v.gap = 0;
        for (const auto& w : j.at("delaunay_vertices")) {
            RatVec vec = vec_from_json(w);
            LatticePoint p;
            for (int i = 0; i < vec.dim(); ++i) {
                if (denominator(vec[i]) != 1)
                    throw InputError("delaunay vertex is not a lattice point");
                p.c.push_back(numerator(vec[i]));
            }
            v.delaunay_vertices.push_back(std::move(p));
        }
    } else {
        v.type = EqualityVerdict::Type::Strict;
        v.gap = rat_from_json(j.at("gap"));
        v.first_fail = j.at("first_fail").get<std::string>();
        v.k = j.at("k").get<std::size_t>();
    }
    return v;
}

json report_to_json(const ProofReport& r) {
    json out;
    json lat;
    lat["n"] = r.n;
    lat["gram"] = mat_to_json(r.gram);
    if (!r.name.empty()) lat["name"] = r.name;
    out["lattice"] = std::move(lat);
    out["R2"] = rat_to_json(r.r_sq);
    out["volume"] = rat_to_json(r.volume);
    out["second_moment"] = rat_to_json(r.second_moment);
    out["deep_hole"] = vec_to_json(r.deep_hole);
    out["k"] = r.k;
    json recs = json::array();
    for (const auto& rec : r.records) {
        json one;
        one["eq"] = rec.eq;
        one["lhs"] = rat_to_json(rec.lhs);
        one["rhs"] = rat_to_json(rec.rhs);
        one["relation"] = rec.relation;
        one["pass"] = rec.pass;
        recs.push_back(std::move(one));
    }
    out["records"] = std::move(recs);
    out["inf_half_shift_sq"] = {{"lattice", rat_to_json(r.inf_half_shift_sq_lattice)},
                                {"pieces", rat_to_json(r.inf_half_shift_sq_pieces)}};
    out["verdict"] = verdict_to_json(r.verdict);
    out["holes_swept"] = r.holes_swept;
    out["elapsed_us"] = r.elapsed_us;
    return out;
}

ProofReport report_from_json(const json& j) {
    ProofReport r;
    const json& lat = j.at("lattice");
    r.n = lat.at("n").get<int>();
    r.gram = mat_from_json(lat.at("gram"));
    if (lat.contains("name")) r.name = lat["name"].get<std::string>();
    r.r_sq = rat_from_json(j.at("R2"));
    r.volume = rat_from_json(j.at("volume"));
    r.second_moment = rat_from_json(j.at("second_moment"));
    r.deep_hole = vec_from_json(j.at("deep_hole"));
    r.k = j.at("k").get<std::size_t>();
    for (const auto& rec : j.at("records")) {
        EqRecord e;
        e.eq = rec.at("eq").get<std::string>();
        e.lhs = rat_from_json(rec.at("lhs"));
        e.rhs = rat_from_json(rec.at("rhs"));
        e.relation = rec.at("relation").get<std::string>();
        e.pass = rec.at("pass").get<bool>();
        r.records.push_back(std::move(e));
    }
    r.inf_half_shift_sq_lattice = rat_from_json(j.at("inf_half_shift_sq").at("lattice"));
    r.inf_half_shift_sq_pieces = rat_from_json(j.at("inf_half_shift_sq").at("pieces"));
    r.verdict = verdict_from_json(j.at("verdict"));
    r.holes_swept = j.at("holes_swept").get<int>();
    r.elapsed_us = j.at("elapsed_us").get<std::int64_t>();
    return r;
}

}  // namespace hlr
