#include "latq/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace latq {

using nlohmann::json;

std::string fmt_double(double x) {
    char buf[40];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, x);
        if (std::strtod(buf, nullptr) == x) return buf;
    }
    return buf;
}

namespace {

Domain domain_from_name(const std::string& s) {
    if (s == "R") return Domain::Real;
    if (s == "C") return Domain::Complex;
    if (s == "H") return Domain::Quat;
    throw UsageError("unknown domain '" + s + "' (expected R, C or H)");
}

Scalar scalar_from_components(const double c[4], Domain dom) {
    if ((dom == Domain::Real && (c[1] != 0 || c[2] != 0 || c[3] != 0)) ||
        (dom == Domain::Complex && (c[2] != 0 || c[3] != 0)))
        throw UsageError("matrix entry has components outside its domain");
    return {c[0], c[1], c[2], c[3], dom};
}

}  // namespace

std::string matrix_to_json(const Matrix& m) {
    json j;
    j["domain"] = domain_name(m.domain());
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json data = json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int jj = 0; jj < m.cols(); ++jj) {
            const Scalar& s = m(i, jj);
            data.push_back({s.c1, s.c2, s.c3, s.c4});
        }
    j["data"] = std::move(data);
    return j.dump();
}

Matrix matrix_from_json(const std::string& text) {
    const json j = json::parse(text);
    const Domain dom = domain_from_name(j.at("domain").get<std::string>());
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    const json& data = j.at("data");
    if (static_cast<int>(data.size()) != rows * cols)
        throw UsageError("matrix JSON: data length does not match rows*cols");
    Matrix m(rows, cols, dom);
    int idx = 0;
    for (int i = 0; i < rows; ++i)
        for (int jj = 0; jj < cols; ++jj, ++idx) {
            const json& q = data.at(idx);
            if (!q.is_array() || q.size() != 4)
                throw UsageError("matrix JSON: entries must be [c1,c2,c3,c4]");
            double c[4] = {q[0].get<double>(), q[1].get<double>(), q[2].get<double>(),
                           q[3].get<double>()};
            m(i, jj) = scalar_from_components(c, dom);
        }
    return m;
}

std::string matrix_to_csv(const Matrix& m) {
    const int dr = components(m.domain());
    std::ostringstream os;
    os << "# domain=" << domain_name(m.domain()) << " rows=" << m.rows()
       << " cols=" << m.cols() << "\n";
    for (int i = 0; i < m.rows(); ++i) {
        bool first = true;
        for (int j = 0; j < m.cols(); ++j)
            for (int c = 0; c < dr; ++c) {
                if (!first) os << ",";
                os << fmt_double(m(i, j).comp(c));
                first = false;
            }
        os << "\n";
    }
    return os.str();
}

Matrix matrix_from_csv(const std::string& text) {
    std::istringstream is(text);
    std::string header;
    if (!std::getline(is, header) || header.rfind("# domain=", 0) != 0)
        throw UsageError("matrix CSV: missing '# domain=...' header");
    std::string dom_s;
    int rows = 0, cols = 0;
    {
        std::istringstream hs(header.substr(1));
        std::string tok;
        while (hs >> tok) {
            if (tok.rfind("domain=", 0) == 0) dom_s = tok.substr(7);
            else if (tok.rfind("rows=", 0) == 0) rows = std::atoi(tok.c_str() + 5);
            else if (tok.rfind("cols=", 0) == 0) cols = std::atoi(tok.c_str() + 5);
        }
    }
    const Domain dom = domain_from_name(dom_s);
    const int dr = components(dom);
    Matrix m(rows, cols, dom);
    for (int i = 0; i < rows; ++i) {
        std::string line;
        if (!std::getline(is, line)) throw UsageError("matrix CSV: too few rows");
        std::istringstream ls(line);
        std::string cell;
        for (int j = 0; j < cols; ++j) {
            double c[4] = {0, 0, 0, 0};
            for (int comp = 0; comp < dr; ++comp) {
                if (!std::getline(ls, cell, ','))
                    throw UsageError("matrix CSV: too few columns in row");
                c[comp] = std::strtod(cell.c_str(), nullptr);
            }
            m(i, j) = scalar_from_components(c, dom);
        }
    }
    return m;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open for writing: " + path);
    f << content;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open for reading: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

Matrix read_matrix_file(const std::string& path) {
    const std::string text = read_file(path);
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
        return matrix_from_csv(text);
    return matrix_from_json(text);
}

void write_matrix_file(const std::string& path, const Matrix& m) {
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
        write_file(path, matrix_to_csv(m));
    else
        write_file(path, matrix_to_json(m));
}

std::string smp_result_to_json(const SmpResult& res, RingId ring) {
    json j;
    j["ring"] = ring_name(ring);
    j["minima"] = res.minima;
    j["radius2"] = res.radius2;
    // Lattice points within the radius; the canonical count keeps one
    // representative per +-pair.
    j["N_c"] = res.n_c;
    j["N_c_canonical"] = res.n_c_canonical;
    json t = json::array();
    for (int i = 0; i < res.T.rows(); ++i) {
        json row = json::array();
        for (int jj = 0; jj < res.T.cols(); ++jj) {
            const Scalar s = to_scalar(res.T(i, jj));
            row.push_back({s.c1, s.c2, s.c3, s.c4});
        }
        t.push_back(std::move(row));
    }
    j["T"] = std::move(t);
    return j.dump();
}

}  // namespace latq
