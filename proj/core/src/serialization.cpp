#include "specseq/serialization.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace specseq {

namespace {

using Trip = std::vector<long long>;

json triplets_to_json(std::vector<Trip> trips) {
    std::sort(trips.begin(), trips.end());
    json out = json::array();
    for (auto& t : trips) out.push_back(t);
    return out;
}

void matrix_triplets(const F2Matrix& m, std::vector<Trip>& out, std::vector<long long> prefix) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (auto j : m.row(i).support()) {
            Trip t = prefix;
            t.push_back((long long)i);
            t.push_back((long long)j);
            out.push_back(std::move(t));
        }
}

json canonical_extra(const json& j) {
    // Sort any array-of-arrays payload so passthrough fields round-trip
    // byte-identically.
    if (j.is_array()) {
        bool all_arrays = std::all_of(j.begin(), j.end(),
                                      [](const json& e) { return e.is_array(); });
        if (all_arrays) {
            std::vector<json> items(j.begin(), j.end());
            std::sort(items.begin(), items.end(),
                      [](const json& a, const json& b) { return a.dump() < b.dump(); });
            json out = json::array();
            for (auto& e : items) out.push_back(e);
            return out;
        }
        return j;
    }
    if (j.is_object()) {
        json out = json::object();
        std::vector<std::string> keys;
        for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
        std::sort(keys.begin(), keys.end());
        for (auto& k : keys) out[k] = canonical_extra(j.at(k));
        return out;
    }
    return j;
}

}  // namespace

json to_json(const Cosimplicial& cx) {
    json j;
    j["kind"] = "cosimplicial";
    j["level_cap"] = cx.cap;
    json levels = json::array();
    for (int p = 0; p <= cx.cap; ++p) {
        const ChainComplex& c = cx.level[p];
        json lvl;
        json degs = json::object();
        for (auto& [q, b] : c.basis) degs[std::to_string(q)] = (long long)b.size();
        lvl["degrees"] = degs;
        std::vector<Trip> trips;
        for (auto& [q, m] : c.diff) matrix_triplets(m, trips, {q});
        lvl["diff"] = triplets_to_json(std::move(trips));
        levels.push_back(std::move(lvl));
    }
    j["levels"] = levels;
    std::vector<Trip> cof, cod;
    for (int p = 0; p + 1 <= cx.cap; ++p) {
        for (int i = 0; i <= p + 1; ++i)
            for (auto& [q, m] : cx.coface[p][i].deg) matrix_triplets(m, cof, {p, i, q});
        for (int i = 0; i <= p; ++i)
            for (auto& [q, m] : cx.codegen[p][i].deg) matrix_triplets(m, cod, {p, i, q});
    }
    j["cofaces"] = triplets_to_json(std::move(cof));
    j["codegens"] = triplets_to_json(std::move(cod));
    return j;
}

json to_json(const ComplexDoc& doc) {
    json j = to_json(doc.cx);
    if (doc.involution) j["involution"] = canonical_extra(*doc.involution);
    if (doc.structure_map) j["structure_map"] = canonical_extra(*doc.structure_map);
    return j;
}

ComplexDoc parse_complex(const json& j) {
    if (!j.is_object() || j.value("kind", std::string{}) != "cosimplicial")
        throw std::invalid_argument("complex file: expected kind \"cosimplicial\"");
    ComplexDoc doc;
    Cosimplicial& cx = doc.cx;
    cx.cap = j.at("level_cap").get<int>();
    if (cx.cap < 0) throw std::invalid_argument("complex file: negative level_cap");
    const json& levels = j.at("levels");
    if ((int)levels.size() != cx.cap + 1)
        throw std::invalid_argument("complex file: levels array does not match level_cap");
    cx.level.resize(cx.cap + 1);
    for (int p = 0; p <= cx.cap; ++p) {
        const json& lvl = levels.at(p);
        ChainComplex& c = cx.level[p];
        for (auto it = lvl.at("degrees").begin(); it != lvl.at("degrees").end(); ++it) {
            int q = std::stoi(it.key());
            int dim = it.value().get<int>();
            if (q < 0 || dim < 0) throw std::invalid_argument("complex file: bad degree entry");
            std::vector<std::string> labels;
            for (int i = 0; i < dim; ++i)
                labels.push_back("x" + std::to_string(p) + "." + std::to_string(q) + "." +
                                 std::to_string(i));
            c.basis[q] = std::move(labels);
        }
        for (const json& t : lvl.at("diff")) {
            int q = t.at(0).get<int>(), row = t.at(1).get<int>(), col = t.at(2).get<int>();
            auto& m = c.diff[q];
            if (!m.rows()) m = F2Matrix(c.dim(q - 1), c.dim(q));
            if (row < 0 || col < 0 || row >= (int)m.rows() || col >= (int)m.cols())
                throw std::invalid_argument("complex file: diff entry out of range");
            m.set(row, col);
        }
    }
    cx.coface.resize(cx.cap);
    cx.codegen.resize(cx.cap);
    for (int p = 0; p < cx.cap; ++p) {
        cx.coface[p].resize(p + 2);
        cx.codegen[p].resize(p + 1);
    }
    auto fill = [&](const json& arr, bool is_coface) {
        for (const json& t : arr) {
            int p = t.at(0).get<int>(), i = t.at(1).get<int>(), q = t.at(2).get<int>();
            int row = t.at(3).get<int>(), col = t.at(4).get<int>();
            if (p < 0 || p >= cx.cap) throw std::invalid_argument("complex file: level out of range");
            int imax = is_coface ? p + 1 : p;
            if (i < 0 || i > imax)
                throw std::invalid_argument("complex file: structure index out of range");
            const ChainComplex& src = is_coface ? cx.level[p] : cx.level[p + 1];
            const ChainComplex& tgt = is_coface ? cx.level[p + 1] : cx.level[p];
            auto& gm = is_coface ? cx.coface[p][i] : cx.codegen[p][i];
            auto& m = gm.deg[q];
            if (!m.rows() && !m.cols()) m = F2Matrix(tgt.dim(q), src.dim(q));
            if (row < 0 || col < 0 || row >= (int)m.rows() || col >= (int)m.cols())
                throw std::invalid_argument("complex file: structure entry out of range");
            m.set(row, col);
        }
    };
    fill(j.at("cofaces"), true);
    fill(j.at("codegens"), false);
    cx.validate();
    if (j.contains("involution")) doc.involution = j.at("involution");
    if (j.contains("structure_map")) doc.structure_map = j.at("structure_map");
    return doc;
}

std::string dump_complex(const ComplexDoc& doc) { return to_json(doc).dump(2) + "\n"; }

ComplexDoc load_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j = json::parse(in);
    return parse_complex(j);
}

void save_complex_file(const ComplexDoc& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << dump_complex(doc);
}

}  // namespace specseq
