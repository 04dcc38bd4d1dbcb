#include "adt/serialize.hpp"

#include <stdexcept>

namespace adt {

using nlohmann::json;

void to_json(json& j, const Gf2Matrix& m) {
    std::vector<std::string> data;
    for (std::size_t i = 0; i < m.rows(); ++i) data.push_back(m.row_string(i));
    j = json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

void from_json(const json& j, Gf2Matrix& m) {
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    auto data = j.at("data").get<std::vector<std::string>>();
    if (data.size() != rows) throw std::invalid_argument("matrix json: row count mismatch");
    for (const auto& s : data)
        if (s.size() != cols) throw std::invalid_argument("matrix json: column count mismatch");
    m = Gf2Matrix::from_rows(data);
    if (rows == 0) m = Gf2Matrix(0, cols);
}

void to_json(json& j, const NetParams& p) {
    if (const auto* g = std::get_if<Params2x2>(&p)) {
        j = json{{"kind", "general"}, {"n11", g->n11}, {"n12", g->n12}, {"n21", g->n21}, {"n22", g->n22}};
    } else {
        const auto& s = std::get<ParamsSym>(p);
        j = json{{"kind", "sym"}, {"m", s.m}, {"n", s.n}, {"L", s.L}};
    }
}

void from_json(const json& j, NetParams& p) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "general") {
        p = Params2x2{j.at("n11").get<int>(), j.at("n12").get<int>(), j.at("n21").get<int>(),
                      j.at("n22").get<int>()};
    } else if (kind == "sym") {
        p = ParamsSym{j.at("m").get<int>(), j.at("n").get<int>(), j.at("L").get<int>()};
    } else {
        throw std::invalid_argument("params json: unknown kind");
    }
}

void to_json(json& j, const LinearCode& c) {
    j = json{{"params", c.params}, {"N", c.N}, {"K", c.K}, {"V", c.V}, {"label", c.label}};
}

void from_json(const json& j, LinearCode& c) {
    j.at("params").get_to(c.params);
    c.N = j.at("N").get<int>();
    c.K = j.at("K").get<int>();
    c.V = j.at("V").get<std::vector<Gf2Matrix>>();
    c.label = j.at("label").get<std::string>();
}

}  // namespace adt
