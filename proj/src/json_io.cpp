#include "wxz/json_io.hpp"

#include <fstream>

namespace wxz {

nlohmann::ordered_json scalar_to_json(const Scalar& s) {
    nlohmann::ordered_json j;
    if (s.is_exact()) {
        j["re"] = rational_to_string(s.exact_re());
        j["im"] = rational_to_string(s.exact_im());
    } else {
        j["re"] = s.re();
        j["im"] = s.im();
        j["approx"] = true;
    }
    return j;
}

Scalar scalar_from_json(const nlohmann::json& j) {
    if (j.is_number()) return Scalar::approx(j.get<double>());
    if (j.is_string()) return Scalar(rational_from_string(j.get<std::string>()));
    if (!j.is_object()) throw ParseError("scalar must be an object, number or string", 0);
    bool approx = j.value("approx", false) || (j.contains("re") && j["re"].is_number());
    if (approx) {
        return Scalar::approx(j.value("re", 0.0), j.value("im", 0.0));
    }
    Rational re = j.contains("re") ? rational_from_string(j["re"].get<std::string>()) : Rational(0);
    Rational im = j.contains("im") ? rational_from_string(j["im"].get<std::string>()) : Rational(0);
    return Scalar(re, im);
}

nlohmann::ordered_json matrix_to_json(const SquareMatrix& m) {
    nlohmann::ordered_json j;
    j["dim"] = m.dim();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int r = 0; r < m.dim(); ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int c = 0; c < m.dim(); ++c) row.push_back(scalar_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

SquareMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("rows")) {
        throw ParseError("matrix document needs 'dim' and 'rows'", 0);
    }
    const int dim = j["dim"].get<int>();
    const auto& rows = j["rows"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
        throw ParseError("row count does not match dim", 0);
    }
    std::vector<Scalar> entries;
    entries.reserve(dim * dim);
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != dim) {
            throw ParseError("column count does not match dim", 0);
        }
        for (const auto& cell : row) entries.push_back(scalar_from_json(cell));
    }
    return SquareMatrix(dim, std::move(entries));
}

SquareMatrix matrix_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw Error("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("bad JSON in ") + path + ": " + e.what(), e.byte);
    }
    return matrix_from_json(j);
}

void json_to_file(const nlohmann::ordered_json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out.good()) throw Error("cannot write " + path);
    out << j.dump(2) << "\n";
}

nlohmann::ordered_json continuous_sym_to_json(const ContinuousSym& s) {
    nlohmann::ordered_json j;
    j["kind"] = "continuous";
    j["t"] = matrix_to_json(s.t);
    j["s"] = matrix_to_json(s.s);
    j["omega"] = scalar_to_json(s.omega);
    j["xi"] = scalar_to_json(s.xi);
    j["zeta"] = scalar_to_json(s.zeta);
    return j;
}

nlohmann::ordered_json discrete_sym_to_json(const DiscreteSym& s) {
    nlohmann::ordered_json j;
    j["kind"] = "discrete";
    switch (s.tag) {
        case DiscreteSym::Tag::TransposeAll: j["tag"] = "transpose"; break;
        case DiscreteSym::Tag::HashWZ:
            j["tag"] = "hash";
            j["w_hash"] = s.w_hash;
            j["z_hash"] = s.z_hash;
            break;
        case DiscreteSym::Tag::FlipInvWZ:
            j["tag"] = "flipinv";
            j["c"] = s.c;
            j["d"] = s.d;
            break;
        case DiscreteSym::Tag::SwapWZ:
            j["tag"] = "swap";
            j["c"] = s.c;
            j["d"] = s.d;
            break;
        case DiscreteSym::Tag::AntiDiag: j["tag"] = "antidiag"; break;
    }
    return j;
}

namespace {

nlohmann::ordered_json lemma_json(const char* kind, const SquareMatrix& conj,
                                  const SquareMatrix& a, const std::string& variant) {
    nlohmann::ordered_json j;
    j["kind"] = kind;
    j["conjugator"] = matrix_to_json(conj);
    j["intertwiner"] = matrix_to_json(a);
    j["variant"] = variant;
    return j;
}

} // namespace

nlohmann::ordered_json lemma1_to_json(const SquareMatrix& t, const SquareMatrix& a,
                                      Lemma1Variant variant) {
    const char* v = variant == Lemma1Variant::LeftX ? "left-x"
                    : variant == Lemma1Variant::RightX ? "right-x"
                                                       : "conj-w";
    return lemma_json("lemma1", t, a, v);
}

nlohmann::ordered_json lemma2_to_json(const SquareMatrix& s, const SquareMatrix& a,
                                      Lemma2Variant variant) {
    const char* v = variant == Lemma2Variant::LeftX ? "left-x"
                    : variant == Lemma2Variant::RightX ? "right-x"
                                                       : "conj-z";
    return lemma_json("lemma2", s, a, v);
}

WxzTriple apply_sym_json(const nlohmann::json& op, const WxzTriple& triple) {
    const std::string kind = op.value("kind", "");
    if (kind == "continuous") {
        ContinuousSym sym;
        sym.t = matrix_from_json(op.at("t"));
        sym.s = matrix_from_json(op.at("s"));
        if (op.contains("omega")) sym.omega = scalar_from_json(op["omega"]);
        if (op.contains("xi")) sym.xi = scalar_from_json(op["xi"]);
        if (op.contains("zeta")) sym.zeta = scalar_from_json(op["zeta"]);
        return apply_continuous(sym, triple);
    }
    if (kind == "discrete") {
        DiscreteSym sym;
        const std::string tag = op.value("tag", "");
        if (tag == "transpose") sym.tag = DiscreteSym::Tag::TransposeAll;
        else if (tag == "hash") sym.tag = DiscreteSym::Tag::HashWZ;
        else if (tag == "flipinv") sym.tag = DiscreteSym::Tag::FlipInvWZ;
        else if (tag == "swap") sym.tag = DiscreteSym::Tag::SwapWZ;
        else if (tag == "antidiag") sym.tag = DiscreteSym::Tag::AntiDiag;
        else throw ParseError("unknown discrete tag '" + tag + "'", 0);
        sym.w_hash = op.value("w_hash", false);
        sym.z_hash = op.value("z_hash", false);
        sym.c = op.value("c", 1);
        sym.d = op.value("d", 1);
        return apply_discrete(sym, triple);
    }
    if (kind == "lemma1" || kind == "lemma2") {
        SquareMatrix conj = matrix_from_json(op.at("conjugator"));
        SquareMatrix a = op.contains("intertwiner") ? matrix_from_json(op["intertwiner"]) : conj;
        const std::string v = op.value("variant", "left-x");
        if (kind == "lemma1") {
            Lemma1Variant variant = v == "right-x" ? Lemma1Variant::RightX
                                    : v == "conj-w" ? Lemma1Variant::ConjW
                                                    : Lemma1Variant::LeftX;
            return apply_lemma1(conj, a, variant, triple);
        }
        Lemma2Variant variant = v == "right-x" ? Lemma2Variant::RightX
                                : v == "conj-z" ? Lemma2Variant::ConjZ
                                                : Lemma2Variant::LeftX;
        return apply_lemma2(conj, a, variant, triple);
    }
    throw ParseError("unknown symmetry kind '" + kind + "'", 0);
}

} // namespace wxz
