#include "lfpoly/io.hpp"

#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "json.hpp"
#include "lfpoly/inequality_library.hpp"

namespace lfpoly {

using nlohmann::json;

namespace {

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path.string());
    return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write " + path.string());
    return out;
}

json inequality_json(const Inequality& ineq) {
    json j;
    j["label"] = ineq.label;
    j["scenario"] = {ineq.scenario.settings, ineq.scenario.outcomes};
    j["A"] = std::vector<int>(ineq.a.data(), ineq.a.data() + ineq.a.size());
    j["B"] = std::vector<int>(ineq.b.data(), ineq.b.data() + ineq.b.size());
    std::vector<std::vector<int>> ab;
    for (int x = 0; x < ineq.ab.rows(); ++x) {
        std::vector<int> row;
        for (int y = 0; y < ineq.ab.cols(); ++y) row.push_back(ineq.ab(x, y));
        ab.push_back(std::move(row));
    }
    j["AB"] = ab;
    j["bound"] = ineq.bound;
    return j;
}

Inequality inequality_from(const json& j) {
    const Scenario s{j.at("scenario").at(0).get<int>(), j.at("scenario").at(1).get<int>()};
    std::vector<int> a = j.at("A").get<std::vector<int>>();
    std::vector<int> b = j.at("B").get<std::vector<int>>();
    std::vector<std::vector<int>> ab = j.at("AB").get<std::vector<std::vector<int>>>();
    return make_inequality(s, a, b, ab, j.at("bound").get<long long>(),
                           j.value("label", std::string{}));
}

} // namespace

void write_vrep(const std::filesystem::path& path, const VRepresentation& v) {
    auto out = open_out(path);
    for (const auto& vert : v.vertices) {
        json j;
        std::vector<std::string> entries;
        entries.reserve(static_cast<size_t>(vert.size()));
        for (Eigen::Index i = 0; i < vert.size(); ++i) entries.push_back(to_string(vert(i)));
        j["vertex"] = entries;
        out << j.dump() << "\n";
    }
}

VRepresentation read_vrep(const std::filesystem::path& path) {
    auto in = open_in(path);
    VRepresentation v;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const json j = json::parse(line);
        const auto entries = j.at("vertex").get<std::vector<std::string>>();
        VectorXq p(static_cast<Eigen::Index>(entries.size()));
        for (size_t i = 0; i < entries.size(); ++i)
            p(static_cast<Eigen::Index>(i)) = parse_rational(entries[i]);
        if (v.vertices.empty()) v.dimension = static_cast<int>(p.size());
        else if (p.size() != v.dimension)
            throw DimensionMismatch("read_vrep: inconsistent vertex dimensions");
        v.vertices.push_back(std::move(p));
    }
    return v;
}

void write_hrep(const std::filesystem::path& path, const HRepresentation& h) {
    auto out = open_out(path);
    for (const auto& row : h.rows) {
        json j;
        std::vector<std::string> coeffs;
        coeffs.reserve(static_cast<size_t>(row.coeffs.size()));
        for (Eigen::Index i = 0; i < row.coeffs.size(); ++i)
            coeffs.push_back(to_string(row.coeffs(i)));
        j["coeffs"] = coeffs;
        j["bound"] = to_string(row.bound);
        out << j.dump() << "\n";
    }
}

HRepresentation read_hrep(const std::filesystem::path& path, int dimension) {
    auto in = open_in(path);
    HRepresentation h;
    h.dimension = dimension;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const json j = json::parse(line);
        const auto coeffs = j.at("coeffs").get<std::vector<std::string>>();
        HRow row;
        row.coeffs.resize(static_cast<Eigen::Index>(coeffs.size()));
        for (size_t i = 0; i < coeffs.size(); ++i)
            row.coeffs(static_cast<Eigen::Index>(i)) = parse_rational(coeffs[i]);
        row.bound = parse_rational(j.at("bound").get<std::string>());
        if (h.dimension < 0) h.dimension = static_cast<int>(row.coeffs.size());
        else if (row.coeffs.size() != h.dimension)
            throw DimensionMismatch("read_hrep: inconsistent row dimensions");
        h.rows.push_back(std::move(row));
    }
    return h;
}

std::string inequality_to_json(const Inequality& ineq) { return inequality_json(ineq).dump(2); }

Inequality inequality_from_json(const std::string& text) {
    return inequality_from(json::parse(text));
}

LoadedBehavior read_behavior(const std::filesystem::path& path) {
    auto in = open_in(path);
    json j;
    in >> j;
    const Scenario s{j.at("scenario").at(0).get<int>(), j.at("scenario").at(1).get<int>()};
    LoadedBehavior out;

    if (j.contains("collins_gisin")) {
        const auto& arr = j.at("collins_gisin");
        const CgLayout lay(s);
        if (static_cast<int>(arr.size()) != lay.dim())
            throw DimensionMismatch("behavior: collins_gisin length mismatch");
        bool exact = true;
        for (const auto& e : arr)
            if (!e.is_string()) exact = false;
        if (exact) {
            VectorXq cg(lay.dim());
            for (int i = 0; i < lay.dim(); ++i)
                cg(i) = parse_rational(arr.at(static_cast<size_t>(i)).get<std::string>());
            out.exact = from_collins_gisin(s, cg);
        } else {
            Eigen::VectorXd cg(lay.dim());
            for (int i = 0; i < lay.dim(); ++i) {
                const auto& e = arr.at(static_cast<size_t>(i));
                cg(i) = e.is_string()
                            ? parse_rational(e.get<std::string>()).convert_to<double>()
                            : e.get<double>();
            }
            out.approx = from_collins_gisin(s, cg);
        }
        return out;
    }

    const auto& table = j.at("table");
    bool exact = true;
    for (int x = 0; x < s.settings && exact; ++x)
        for (int y = 0; y < s.settings && exact; ++y)
            for (int a = 0; a < s.outcomes && exact; ++a)
                for (int b = 0; b < s.outcomes && exact; ++b)
                    if (!table.at(x).at(y).at(a).at(b).is_string()) exact = false;
    if (exact) {
        BehaviorQ b(s);
        for (int x = 1; x <= s.settings; ++x)
            for (int y = 1; y <= s.settings; ++y)
                for (int a = 1; a <= s.outcomes; ++a)
                    for (int bb = 1; bb <= s.outcomes; ++bb)
                        b.at(x, a, y, bb) = parse_rational(
                            table.at(x - 1).at(y - 1).at(a - 1).at(bb - 1).get<std::string>());
        out.exact = std::move(b);
    } else {
        BehaviorD b(s);
        for (int x = 1; x <= s.settings; ++x)
            for (int y = 1; y <= s.settings; ++y)
                for (int a = 1; a <= s.outcomes; ++a)
                    for (int bb = 1; bb <= s.outcomes; ++bb) {
                        const auto& e = table.at(x - 1).at(y - 1).at(a - 1).at(bb - 1);
                        b.at(x, a, y, bb) =
                            e.is_string() ? parse_rational(e.get<std::string>()).convert_to<double>()
                                          : e.get<double>();
                    }
        out.approx = std::move(b);
    }
    return out;
}

namespace {

template <class Scalar, class Convert>
void write_behavior_impl(const std::filesystem::path& path, const Behavior<Scalar>& b,
                         Convert convert) {
    json table = json::array();
    const auto& s = b.scenario();
    for (int x = 1; x <= s.settings; ++x) {
        json per_y = json::array();
        for (int y = 1; y <= s.settings; ++y) {
            json per_a = json::array();
            for (int a = 1; a <= s.outcomes; ++a) {
                json per_b = json::array();
                for (int bb = 1; bb <= s.outcomes; ++bb) per_b.push_back(convert(b.at(x, a, y, bb)));
                per_a.push_back(std::move(per_b));
            }
            per_y.push_back(std::move(per_a));
        }
        table.push_back(std::move(per_y));
    }
    json j;
    j["scenario"] = {s.settings, s.outcomes};
    j["table"] = std::move(table);
    auto out = open_out(path);
    out << j.dump(2) << "\n";
}

} // namespace

void write_behavior(const std::filesystem::path& path, const BehaviorQ& b) {
    write_behavior_impl(path, b, [](const Rational& r) { return json(to_string(r)); });
}

void write_behavior(const std::filesystem::path& path, const BehaviorD& b) {
    write_behavior_impl(path, b, [](double d) { return json(d); });
}

void write_classes(const std::filesystem::path& path, const std::vector<FacetClass>& classes) {
    json arr = json::array();
    for (const auto& cls : classes) {
        json j;
        j["label"] = cls.label;
        j["canonical"] = inequality_json(cls.representative);
        j["multiplicity"] = cls.multiplicity;
        j["member_rows"] = cls.member_rows;
        j["matched"] = cls.matched;
        arr.push_back(std::move(j));
    }
    auto out = open_out(path);
    out << arr.dump(2) << "\n";
}

std::string file_sha256(const std::filesystem::path& path) {
    auto in = open_in(path);
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    char buf[1 << 16];
    while (in.read(buf, sizeof buf) || in.gcount() > 0)
        EVP_DigestUpdate(ctx, buf, static_cast<size_t>(in.gcount()));
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, digest, &len);
    EVP_MD_CTX_free(ctx);
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 15]);
    }
    return out;
}

} // namespace lfpoly
