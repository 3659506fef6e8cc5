#include "hermes/codefile.hpp"

#include "hermes/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace hermes {

namespace {

using Json = nlohmann::ordered_json;

std::uint64_t get_uint(const Json& j, const char* key, std::uint64_t max) {
    if (!j.contains(key)) fail(Errc::parse_error, std::string("header is missing \"") + key + "\"");
    const auto& v = j.at(key);
    if (!v.is_number_unsigned()) fail(Errc::parse_error, std::string("header field \"") + key + "\" must be a non-negative integer");
    const auto u = v.get<std::uint64_t>();
    if (u > max) fail(Errc::parse_error, std::string("header field \"") + key + "\" is out of range");
    return u;
}

} // namespace

LinearCode code_from_json_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        fail(Errc::parse_error, std::string("invalid JSON: ") + ex.what());
    }
    if (!doc.is_object() || !doc.contains("header") || !doc.contains("basis"))
        fail(Errc::parse_error, "expected an object with \"header\" and \"basis\"");
    const Json& header = doc.at("header");

    const auto p = get_uint(header, "p", kDefaultFieldCap);
    const auto e = static_cast<std::uint32_t>(get_uint(header, "e", 32));
    const auto n = static_cast<std::uint32_t>(get_uint(header, "n", 1u << 12));
    if (e == 0 || n == 0) fail(Errc::parse_error, "header fields e and n must be >= 1");

    FieldPtr base;
    try {
        base = make_field(p, e);
    } catch (const Error& ex) {
        fail(Errc::parse_error, std::string("bad base field in header: ") + ex.what());
    }

    if (!header.contains("modulus") || !header.at("modulus").is_array())
        fail(Errc::parse_error, "header field \"modulus\" must be an array of digits");
    std::vector<std::uint32_t> modulus;
    for (const auto& d : header.at("modulus")) {
        if (!d.is_number_unsigned() || d.get<std::uint64_t>() >= p)
            fail(Errc::parse_error, "modulus digits must be integers below p");
        modulus.push_back(d.get<std::uint32_t>());
    }
    if (modulus != base->modulus())
        fail(Errc::parse_error,
             "modulus does not match the canonical irreducible polynomial for GF(" + std::to_string(p) + "^" +
                 std::to_string(e) + ")");

    const auto ext = quadratic_extension(base);

    const Json& basis_json = doc.at("basis");
    if (!basis_json.is_array()) fail(Errc::parse_error, "\"basis\" must be an array of matrices");
    std::vector<HermitianMatrix> basis;
    for (std::size_t b = 0; b < basis_json.size(); ++b) {
        const Json& mat = basis_json[b];
        const std::string where = "basis[" + std::to_string(b) + "]";
        if (!mat.is_array() || mat.size() != n) fail(Errc::parse_error, where + " must have " + std::to_string(n) + " rows");
        std::vector<std::vector<std::uint32_t>> rows(n);
        for (std::uint32_t i = 0; i < n; ++i) {
            const Json& row = mat[i];
            if (!row.is_array() || row.size() != n)
                fail(Errc::parse_error, where + " row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
            for (std::uint32_t j = 0; j < n; ++j) {
                if (!row[j].is_string())
                    fail(Errc::parse_error, where + " entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                ") must be an element digit string");
                try {
                    rows[i].push_back(ext->parse_digit_string(row[j].get<std::string>()));
                } catch (const Error& ex) {
                    fail(Errc::parse_error, where + " entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                "): " + ex.what());
                }
            }
        }
        try {
            basis.push_back(HermitianMatrix::from_entries(ext, n, rows));
        } catch (const Error& ex) {
            fail(Errc::not_hermitian, where + ": " + ex.what());
        }
    }
    return LinearCode(ext, n, std::move(basis));
}

LinearCode load_code_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::parse_error, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return code_from_json_text(buf.str());
}

std::string code_to_json_text(const LinearCode& code) {
    const auto& ext = code.field();
    const auto base = ext->base();
    Json header;
    header["p"] = base->characteristic();
    header["e"] = base->degree();
    header["n"] = code.order();
    header["modulus"] = base->modulus();
    Json basis = Json::array();
    for (const auto& m : code.basis()) {
        Json mat = Json::array();
        for (std::uint32_t i = 0; i < code.order(); ++i) {
            Json row = Json::array();
            for (std::uint32_t j = 0; j < code.order(); ++j) row.push_back(ext->digit_string(m.value_at(i, j)));
            mat.push_back(row);
        }
        basis.push_back(mat);
    }
    Json doc;
    doc["header"] = header;
    doc["basis"] = basis;
    return doc.dump(2) + "\n";
}

void save_code_file(const std::filesystem::path& path, const LinearCode& code) {
    std::ofstream out(path);
    if (!out) fail(Errc::parse_error, "cannot write " + path.string());
    out << code_to_json_text(code);
}

VerifyReport verify_code(const LinearCode& code, std::uint64_t codeword_cap) {
    VerifyReport r;
    const auto base = code.field()->base();
    r.p = base->characteristic();
    r.e = base->degree();
    r.q = base->size();
    r.n = code.order();
    r.dimension = code.dimension();
    r.size = code.size();
    if (code.dimension() == 0) {
        r.degenerate = true;
        return r;
    }
    const CodeParams params = code.params(codeword_cap);
    r.min_dist = params.min_dist;
    r.packing_radius = params.packing_radius();
    const auto singleton = singleton_check(params);
    r.singleton_bound = singleton.bound;
    r.is_mrd = singleton.is_mrd;
    const auto packing = sphere_packing_check(params);
    r.covered = packing.covered;
    r.ambient = packing.ambient;
    r.slack = packing.slack;
    r.is_perfect = packing.is_perfect;
    r.density = packing_density(params);
    if (params.min_dist >= 2 && params.min_dist <= 6)
        r.general_upper = density_upper_bound_general(r.q, r.n, params.min_dist);
    return r;
}

} // namespace hermes
