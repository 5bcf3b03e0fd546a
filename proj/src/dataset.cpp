#include "gxmr/dataset.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "gxmr/types.hpp"

namespace gxmr {

void Dataset::validate(bool binary_y) const {
    auto check_len = [&](const Eigen::VectorXd& v, const char* name) {
        if (v.size() != n) {
            throw MalformedInputError(std::string("column '") + name + "' has " +
                                      std::to_string(v.size()) + " rows, expected " +
                                      std::to_string(n));
        }
    };
    check_len(y, "y");
    check_len(x, "x");
    check_len(g, "g");
    check_len(z, "z");
    check_len(g_iv, "g_iv");
    if (u_hidden) check_len(*u_hidden, "u");
    for (Eigen::Index i = 0; i < n; ++i) {
        if (g[i] != 0.0 && g[i] != 1.0 && g[i] != 2.0) {
            throw MalformedInputError("g entries must be 0, 1 or 2");
        }
        if (binary_y && y[i] != 0.0 && y[i] != 1.0) {
            throw MalformedInputError("logistic y entries must be 0 or 1");
        }
    }
}

namespace {

void append_double(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

}  // namespace

std::string dataset_to_csv(const Dataset& d, bool include_u) {
    const bool with_u = include_u && d.u_hidden.has_value();
    std::string out = with_u ? "y,x,g,z,g_iv,u\n" : "y,x,g,z,g_iv\n";
    for (Eigen::Index i = 0; i < d.n; ++i) {
        append_double(out, d.y[i]);
        out += ',';
        append_double(out, d.x[i]);
        out += ',';
        append_double(out, d.g[i]);
        out += ',';
        append_double(out, d.z[i]);
        out += ',';
        append_double(out, d.g_iv[i]);
        if (with_u) {
            out += ',';
            append_double(out, (*d.u_hidden)[i]);
        }
        out += '\n';
    }
    return out;
}

void write_dataset_csv(const Dataset& d, const std::string& path, bool include_u) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw MalformedInputError("cannot open '" + path + "' for writing");
    out << dataset_to_csv(d, include_u);
}

Dataset dataset_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw MalformedInputError("empty dataset");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    bool with_u = false;
    if (line == "y,x,g,z,g_iv,u") with_u = true;
    else if (line != "y,x,g,z,g_iv") {
        throw MalformedInputError("expected header 'y,x,g,z,g_iv[,u]', got '" + line + "'");
    }

    std::vector<double> y, x, g, z, g_iv, u;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        std::vector<double> vals;
        while (std::getline(row, cell, ',')) {
            try {
                vals.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw MalformedInputError("line " + std::to_string(lineno) +
                                          ": cannot parse '" + cell + "'");
            }
        }
        const std::size_t want = with_u ? 6 : 5;
        if (vals.size() != want) {
            throw MalformedInputError("line " + std::to_string(lineno) + ": expected " +
                                      std::to_string(want) + " fields, got " +
                                      std::to_string(vals.size()));
        }
        y.push_back(vals[0]);
        x.push_back(vals[1]);
        g.push_back(vals[2]);
        z.push_back(vals[3]);
        g_iv.push_back(vals[4]);
        if (with_u) u.push_back(vals[5]);
    }
    if (y.empty()) throw MalformedInputError("empty dataset");

    Dataset d;
    d.n = static_cast<Eigen::Index>(y.size());
    auto to_vec = [](const std::vector<double>& v) {
        return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()))
            .eval();
    };
    d.y = to_vec(y);
    d.x = to_vec(x);
    d.g = to_vec(g);
    d.z = to_vec(z);
    d.g_iv = to_vec(g_iv);
    if (with_u) d.u_hidden = to_vec(u);
    return d;
}

Dataset read_dataset_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedInputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return dataset_from_csv(buf.str());
}

}  // namespace gxmr
