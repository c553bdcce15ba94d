#include "sseq/model_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

namespace sseq {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ModelError(where + ": " + what);
}

int get_int(const json& j, const std::string& where, const char* field) {
    if (!j.contains(field)) fail(where + "/" + field, "missing required integer field");
    const json& v = j.at(field);
    if (!v.is_number_integer()) fail(where + "/" + field, "expected an integer");
    return v.get<int>();
}

std::vector<int> parse_key(const std::string& key, const std::string& where, int arity) {
    std::vector<int> out;
    size_t pos = 0;
    while (true) {
        size_t comma = key.find(',', pos);
        std::string part = key.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            size_t used = 0;
            out.push_back(std::stoi(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            fail(where + "/" + key, "key must be comma-joined decimal integers");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if ((int)out.size() != arity)
        fail(where + "/" + key, "expected " + std::to_string(arity) + " comma-joined indices");
    return out;
}

Int parse_entry(const json& v, const std::string& where, int idx) {
    if (!v.is_string()) fail(where, "entry " + std::to_string(idx) + " must be a decimal integer string");
    try {
        return Int(v.get<std::string>());
    } catch (const std::exception&) {
        fail(where, "entry " + std::to_string(idx) + " is not a decimal integer");
    }
}

IntMatrix parse_matrix(const json& v, const std::string& where, int rows, int cols) {
    if (!v.is_array()) fail(where, "matrix must be an array of integer strings");
    if ((int)v.size() != rows * cols)
        fail(where, "expected " + std::to_string(rows) + "x" + std::to_string(cols) + " = " +
                        std::to_string(rows * cols) + " entries, got " + std::to_string(v.size()));
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = parse_entry(v[(size_t)(i * cols + j)], where, i * cols + j);
    return m;
}

/// Generator matrix with a known row count; the column count is inferred.
IntMatrix parse_generators(const json& v, const std::string& where, int rows) {
    if (!v.is_array()) fail(where, "matrix must be an array of integer strings");
    if (rows == 0) {
        if (!v.empty()) fail(where, "nonempty matrix over a rank-0 group");
        return IntMatrix(0, 0);
    }
    if (v.size() % rows != 0)
        fail(where, "entry count " + std::to_string(v.size()) + " is not a multiple of " + std::to_string(rows) +
                        " rows");
    return parse_matrix(v, where, rows, (int)v.size() / rows);
}

const json& table(const json& j, const char* field) {
    static const json empty = json::object();
    if (!j.contains(field)) return empty;
    const json& t = j.at(field);
    if (!t.is_object()) fail(std::string("/") + field, "expected an object keyed by index strings");
    return t;
}

template <typename F>
void for_table(const json& j, const char* field, int arity, F&& fn) {
    const std::string where = std::string("/") + field;
    for (const auto& [key, value] : table(j, field).items()) fn(parse_key(key, where, arity), value, where + "/" + key);
}

Model parse_filtered(const json& j) {
    int lo = get_int(j, "", "lo"), hi = get_int(j, "", "hi");
    int pmin = get_int(j, "", "pmin"), pmax = get_int(j, "", "pmax");
    if (hi < lo - 1) fail("/hi", "degree range is empty the wrong way (hi < lo-1)");
    std::vector<int> ranks(std::max(0, hi - lo + 1), 0);
    for_table(j, "ranks", 1, [&](const std::vector<int>& k, const json& v, const std::string& where) {
        if (k[0] < lo || k[0] > hi) fail(where, "degree outside [lo,hi]");
        if (!v.is_number_integer() || v.get<int>() < 0) fail(where, "rank must be a nonnegative integer");
        ranks[k[0] - lo] = v.get<int>();
    });
    auto rank = [&](int n) { return (n < lo || n > hi) ? 0 : ranks[n - lo]; };
    std::vector<IntMatrix> diffs;
    for (int n = lo; n <= hi; ++n) diffs.push_back(IntMatrix(rank(n + 1), rank(n)));
    for_table(j, "d", 1, [&](const std::vector<int>& k, const json& v, const std::string& where) {
        if (k[0] < lo || k[0] > hi) fail(where, "degree outside [lo,hi]");
        diffs[k[0] - lo] = parse_matrix(v, where, rank(k[0] + 1), rank(k[0]));
    });
    std::vector<std::vector<Lattice>> filt(std::max(0, pmax - pmin + 1));
    for (int p = pmin; p <= pmax; ++p)
        for (int n = lo; n <= hi; ++n) filt[p - pmin].push_back(Lattice::zero(rank(n)));
    for_table(j, "filt", 2, [&](const std::vector<int>& k, const json& v, const std::string& where) {
        auto [p, n] = std::pair(k[0], k[1]);
        if (p < pmin || p > pmax) fail(where, "filtration index outside [pmin,pmax]");
        if (n < lo || n > hi) fail(where, "degree outside [lo,hi]");
        filt[p - pmin][n - lo] = Lattice::from_generators(parse_generators(v, where, rank(n)));
    });
    Model m{ModelKind::Filtered, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
    try {
        CochainComplex c(lo, hi, std::move(ranks), std::move(diffs));
        m.filtered.emplace(std::move(c), pmin, pmax, std::move(filt));
    } catch (const std::invalid_argument& e) {
        fail("", e.what());
    }
    return m;
}

Model parse_double(const json& j) {
    int amax = get_int(j, "", "amax"), bmin = get_int(j, "", "bmin"), bmax = get_int(j, "", "bmax");
    if (amax < -1 || bmax < bmin - 1) fail("/amax", "empty range must be amax = -1 or bmax = bmin-1");
    std::vector<std::vector<int>> ranks(std::max(0, amax + 1), std::vector<int>(std::max(0, bmax - bmin + 1), 0));
    auto in_range = [&](int a, int b) { return a >= 0 && a <= amax && b >= bmin && b <= bmax; };
    for_table(j, "ranks", 2, [&](const std::vector<int>& k, const json& v, const std::string& where) {
        if (!in_range(k[0], k[1])) fail(where, "bidegree outside the declared ranges");
        if (!v.is_number_integer() || v.get<int>() < 0) fail(where, "rank must be a nonnegative integer");
        ranks[k[0]][k[1] - bmin] = v.get<int>();
    });
    auto rank = [&](int a, int b) { return in_range(a, b) ? ranks[a][b - bmin] : 0; };
    std::vector<std::vector<IntMatrix>> d1(std::max(0, amax + 1)), d2(std::max(0, amax + 1));
    for (int a = 0; a <= amax; ++a)
        for (int b = bmin; b <= bmax; ++b) {
            d1[a].push_back(IntMatrix(rank(a + 1, b), rank(a, b)));
            d2[a].push_back(IntMatrix(rank(a, b + 1), rank(a, b)));
        }
    for_table(j, "d1", 2, [&](const std::vector<int>& k, const json& v, const std::string& where) {
        if (!in_range(k[0], k[1])) fail(where, "bidegree outside the declared ranges");
        d1[k[0]][k[1] - bmin] = parse_matrix(v, where, rank(k[0] + 1, k[1]), rank(k[0], k[1]));
    });
    for_table(j, "d2", 2, [&](const std::vector<int>& k, const json& v, const std::string& where) {
        if (!in_range(k[0], k[1])) fail(where, "bidegree outside the declared ranges");
        d2[k[0]][k[1] - bmin] = parse_matrix(v, where, rank(k[0], k[1] + 1), rank(k[0], k[1]));
    });
    Model m{ModelKind::Double, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
    try {
        m.double_cx.emplace(amax, bmin, bmax, std::move(ranks), std::move(d1), std::move(d2));
    } catch (const std::invalid_argument& e) {
        fail("", e.what());
    }
    return m;
}

Model parse_cos_ab(const json& j) {
    int top = get_int(j, "", "top");
    if (top < 0) fail("/top", "top must be nonnegative");
    std::vector<int> ranks(top + 1, 0);
    for_table(j, "ranks", 1, [&](const std::vector<int>& k, const json& v, const std::string& where) {
        if (k[0] < 0 || k[0] > top) fail(where, "level outside [0,top]");
        if (!v.is_number_integer() || v.get<int>() < 0) fail(where, "rank must be a nonnegative integer");
        ranks[k[0]] = v.get<int>();
    });
    std::vector<std::vector<IntMatrix>> coface(top + 1), codeg(top);
    for (int n = 1; n <= top; ++n) coface[n].assign(n + 1, IntMatrix(ranks[n], ranks[n - 1]));
    for (int n = 0; n < top; ++n) codeg[n].assign(n + 1, IntMatrix(ranks[n], ranks[n + 1]));
    for_table(j, "coface", 2, [&](const std::vector<int>& k, const json& v, const std::string& where) {
        auto [n, i] = std::pair(k[0], k[1]);
        if (n < 1 || n > top || i < 0 || i > n) fail(where, "coface index out of range (need 1<=n<=top, 0<=i<=n)");
        coface[n][i] = parse_matrix(v, where, ranks[n], ranks[n - 1]);
    });
    for_table(j, "codeg", 2, [&](const std::vector<int>& k, const json& v, const std::string& where) {
        auto [n, i] = std::pair(k[0], k[1]);
        if (n < 0 || n >= top || i < 0 || i > n) fail(where, "codegeneracy index out of range (need 0<=n<top, 0<=i<=n)");
        codeg[n][i] = parse_matrix(v, where, ranks[n], ranks[n + 1]);
    });
    Model m{ModelKind::CosimplicialAbelian, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
    try {
        m.cos_ab.emplace(top, std::move(ranks), std::move(coface), std::move(codeg));
    } catch (const std::invalid_argument& e) {
        fail("", e.what());
    }
    return m;
}

Model parse_cos_cx(const json& j) {
    int top = get_int(j, "", "top");
    int lo = get_int(j, "", "lo"), hi = get_int(j, "", "hi");
    if (top < 0) fail("/top", "top must be nonnegative");
    if (hi < lo - 1) fail("/hi", "degree range is empty the wrong way (hi < lo-1)");
    int degs = std::max(0, hi - lo + 1);
    std::vector<std::vector<int>> ranks(top + 1, std::vector<int>(degs, 0));
    for_table(j, "ranks", 2, [&](const std::vector<int>& k, const json& v, const std::string& where) {
        if (k[0] < 0 || k[0] > top || k[1] < lo || k[1] > hi) fail(where, "index outside [0,top]x[lo,hi]");
        if (!v.is_number_integer() || v.get<int>() < 0) fail(where, "rank must be a nonnegative integer");
        ranks[k[0]][k[1] - lo] = v.get<int>();
    });
    auto rank = [&](int n, int b) { return (b < lo || b > hi) ? 0 : ranks[n][b - lo]; };
    std::vector<std::vector<IntMatrix>> diffs(top + 1);
    for (int n = 0; n <= top; ++n)
        for (int b = lo; b <= hi; ++b) diffs[n].push_back(IntMatrix(rank(n, b + 1), rank(n, b)));
    for_table(j, "d", 2, [&](const std::vector<int>& k, const json& v, const std::string& where) {
        if (k[0] < 0 || k[0] > top || k[1] < lo || k[1] > hi) fail(where, "index outside [0,top]x[lo,hi]");
        diffs[k[0]][k[1] - lo] = parse_matrix(v, where, rank(k[0], k[1] + 1), rank(k[0], k[1]));
    });
    std::vector<CochainComplex> levels;
    try {
        for (int n = 0; n <= top; ++n) levels.push_back(CochainComplex(lo, hi, ranks[n], diffs[n]));
    } catch (const std::invalid_argument& e) {
        fail("", e.what());
    }
    auto parse_map = [&](const json& v, const std::string& where, int dom, int cod) {
        if (!v.is_object()) fail(where, "expected an object keyed by internal degree");
        std::vector<IntMatrix> maps;
        for (int b = lo; b <= hi; ++b) maps.push_back(IntMatrix(rank(cod, b), rank(dom, b)));
        for (const auto& [key, mat] : v.items()) {
            int b = parse_key(key, where, 1)[0];
            if (b < lo || b > hi) fail(where + "/" + key, "internal degree outside [lo,hi]");
            maps[b - lo] = parse_matrix(mat, where + "/" + key, rank(cod, b), rank(dom, b));
        }
        try {
            return make_chain_map(levels[dom], levels[cod], std::move(maps), lo);
        } catch (const std::invalid_argument& e) {
            fail(where, e.what());
        }
    };
    std::vector<std::vector<ChainMap>> coface(top + 1), codeg(top);
    for (int n = 1; n <= top; ++n)
        for (int i = 0; i <= n; ++i) coface[n].push_back(zero_chain_map(levels[n - 1], levels[n]));
    for (int n = 0; n < top; ++n)
        for (int i = 0; i <= n; ++i) codeg[n].push_back(zero_chain_map(levels[n + 1], levels[n]));
    for_table(j, "coface", 2, [&](const std::vector<int>& k, const json& v, const std::string& where) {
        auto [n, i] = std::pair(k[0], k[1]);
        if (n < 1 || n > top || i < 0 || i > n) fail(where, "coface index out of range (need 1<=n<=top, 0<=i<=n)");
        coface[n][i] = parse_map(v, where, n - 1, n);
    });
    for_table(j, "codeg", 2, [&](const std::vector<int>& k, const json& v, const std::string& where) {
        auto [n, i] = std::pair(k[0], k[1]);
        if (n < 0 || n >= top || i < 0 || i > n) fail(where, "codegeneracy index out of range (need 0<=n<top, 0<=i<=n)");
        codeg[n][i] = parse_map(v, where, n + 1, n);
    });
    Model m{ModelKind::Cosimplicial, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
    try {
        m.cos_cx.emplace(top, std::move(levels), std::move(coface), std::move(codeg));
    } catch (const std::invalid_argument& e) {
        fail("", e.what());
    }
    return m;
}

json matrix_json(const IntMatrix& m) {
    json a = json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a.push_back(m.at(i, j).get_str());
    return a;
}

std::string key2(int a, int b) { return std::to_string(a) + "," + std::to_string(b); }

}  // namespace

Model parse_model(const nlohmann::json& doc) {
    if (!doc.is_object()) fail("", "document must be a JSON object");
    if (!doc.contains("schema") || doc.at("schema") != 1) fail("/schema", "missing or unsupported schema version (need 1)");
    if (!doc.contains("type") || !doc.at("type").is_string()) fail("/type", "missing type tag");
    std::string type = doc.at("type").get<std::string>();
    if (type == "filtered_complex") return parse_filtered(doc);
    if (type == "double_complex") return parse_double(doc);
    if (type == "cosimplicial_abelian") return parse_cos_ab(doc);
    if (type == "cosimplicial_complex") return parse_cos_cx(doc);
    fail("/type", "unknown model type \"" + type + "\"");
}

Model load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ModelError(path + ": cannot open file");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ModelError(path + ": " + e.what());
    }
    return parse_model(doc);
}

nlohmann::json model_json(const FilteredComplex& f) {
    const CochainComplex& c = f.complex();
    json j{{"schema", 1}, {"type", "filtered_complex"}, {"lo", c.lo()}, {"hi", c.hi()},
           {"pmin", f.pmin()},  {"pmax", f.pmax()}};
    json ranks = json::object(), d = json::object(), filt = json::object();
    for (int n = c.lo(); n <= c.hi(); ++n) {
        if (c.rank(n) > 0) ranks[std::to_string(n)] = c.rank(n);
        if (!c.d(n).is_zero()) d[std::to_string(n)] = matrix_json(c.d(n));
        for (int p = f.pmin(); p <= f.pmax(); ++p)
            if (f.filt(p, n).basis().cols() > 0) filt[key2(p, n)] = matrix_json(f.filt(p, n).basis());
    }
    j["ranks"] = std::move(ranks);
    j["d"] = std::move(d);
    j["filt"] = std::move(filt);
    return j;
}

nlohmann::json model_json(const DoubleComplex& k) {
    json j{{"schema", 1}, {"type", "double_complex"}, {"amax", k.amax()}, {"bmin", k.bmin()}, {"bmax", k.bmax()}};
    json ranks = json::object(), d1 = json::object(), d2 = json::object();
    for (int a = 0; a <= k.amax(); ++a)
        for (int b = k.bmin(); b <= k.bmax(); ++b) {
            if (k.rank(a, b) > 0) ranks[key2(a, b)] = k.rank(a, b);
            if (!k.d1(a, b).is_zero()) d1[key2(a, b)] = matrix_json(k.d1(a, b));
            if (!k.d2(a, b).is_zero()) d2[key2(a, b)] = matrix_json(k.d2(a, b));
        }
    j["ranks"] = std::move(ranks);
    j["d1"] = std::move(d1);
    j["d2"] = std::move(d2);
    return j;
}

nlohmann::json model_json(const CosimplicialAbGroup& c) {
    json j{{"schema", 1}, {"type", "cosimplicial_abelian"}, {"top", c.top()}};
    json ranks = json::object(), coface = json::object(), codeg = json::object();
    for (int n = 0; n <= c.top(); ++n)
        if (c.rank(n) > 0) ranks[std::to_string(n)] = c.rank(n);
    for (int n = 1; n <= c.top(); ++n)
        for (int i = 0; i <= n; ++i)
            if (!c.coface(n, i).is_zero()) coface[key2(n, i)] = matrix_json(c.coface(n, i));
    for (int n = 0; n < c.top(); ++n)
        for (int i = 0; i <= n; ++i)
            if (!c.codeg(n, i).is_zero()) codeg[key2(n, i)] = matrix_json(c.codeg(n, i));
    j["ranks"] = std::move(ranks);
    j["coface"] = std::move(coface);
    j["codeg"] = std::move(codeg);
    return j;
}

nlohmann::json model_json(const CosimplicialComplex& c) {
    int lo = c.level(0).lo(), hi = c.level(0).hi();
    json j{{"schema", 1}, {"type", "cosimplicial_complex"}, {"top", c.top()}, {"lo", lo}, {"hi", hi}};
    json ranks = json::object(), d = json::object();
    for (int n = 0; n <= c.top(); ++n)
        for (int b = lo; b <= hi; ++b) {
            if (c.level(n).rank(b) > 0) ranks[key2(n, b)] = c.level(n).rank(b);
            if (!c.level(n).d(b).is_zero()) d[key2(n, b)] = matrix_json(c.level(n).d(b));
        }
    auto map_json = [&](const ChainMap& f) {
        json m = json::object();
        for (int b = lo; b <= hi; ++b)
            if (!f.f(b).is_zero()) m[std::to_string(b)] = matrix_json(f.f(b));
        return m;
    };
    json coface = json::object(), codeg = json::object();
    for (int n = 1; n <= c.top(); ++n)
        for (int i = 0; i <= n; ++i) coface[key2(n, i)] = map_json(c.coface(n, i));
    for (int n = 0; n < c.top(); ++n)
        for (int i = 0; i <= n; ++i) codeg[key2(n, i)] = map_json(c.codeg(n, i));
    j["ranks"] = std::move(ranks);
    j["d"] = std::move(d);
    j["coface"] = std::move(coface);
    j["codeg"] = std::move(codeg);
    return j;
}

PageTable make_page_table(const FilteredComplex& f, int r_max, Convention conv) {
    PageTable t;
    t.convention = conv;
    std::vector<Page> pg = pages(f, r_max);
    std::map<int, int> stab = stabilization_index(f);
    for (const Page& page : pg)
        for (const auto& [pq, sub] : page.entries) {
            InvariantFactors inv = invariants(sub);
            auto dit = page.differentials.find(pq);
            int drank = dit == page.differentials.end() ? 0 : hom_rank(dit->second);
            if (inv.is_trivial() && drank == 0) continue;
            auto [p, q] = pq;
            int n = p + q;
            bool stable = stab.count(n) && page.r >= stab.at(n);
            int q_out = conv == Convention::CE ? q : -q;
            t.rows.push_back({page.r, p, q_out, std::move(inv), drank, stable});
        }
    std::sort(t.rows.begin(), t.rows.end(), [](const PageTable::Row& a, const PageTable::Row& b) {
        return std::tie(a.r, a.p, a.q) < std::tie(b.r, b.p, b.q);
    });
    return t;
}

std::string render_tsv(const PageTable& t) {
    std::ostringstream out;
    out << "# convention\t" << (t.convention == Convention::CE ? "ce" : "bk") << "\n";
    out << "r\tp\tq\tentry\td_rank\tstable\n";
    for (const PageTable::Row& row : t.rows)
        out << row.r << "\t" << row.p << "\t" << row.q << "\t" << row.entry.to_string() << "\t" << row.d_rank
            << "\t" << (row.stable ? "yes" : "no") << "\n";
    return out.str();
}

nlohmann::json render_json(const PageTable& t) {
    json rows = json::array();
    for (const PageTable::Row& row : t.rows) {
        json torsion = json::array();
        for (const Int& d : row.entry.torsion) torsion.push_back(d.get_str());
        rows.push_back({{"r", row.r},
                        {"p", row.p},
                        {"q", row.q},
                        {"free_rank", row.entry.free_rank},
                        {"torsion", std::move(torsion)},
                        {"d_rank", row.d_rank},
                        {"stable", row.stable}});
    }
    return json{{"convention", t.convention == Convention::CE ? "ce" : "bk"}, {"rows", std::move(rows)}};
}

nlohmann::json report_json(const ComparisonReport& rep) {
    json items = json::array();
    for (const ComparisonReport::Item& it : rep.items)
        if (!it.iso || !it.d_commutes)
            items.push_back({{"p", it.p}, {"q", it.q}, {"r", it.r}, {"iso", it.iso}, {"d_commutes", it.d_commutes}});
    return json{{"pass", rep.pass}, {"checked", rep.items.size()}, {"failures", std::move(items)}, {"detail", rep.detail}};
}

}  // namespace sseq
