#include "buresgeom/io.hpp"

#include <fstream>
#include <json.hpp>

namespace buresgeom {

using nlohmann::json;

json density_to_json(const DensityMatrix& rho) {
    const int n = rho.dim();
    json re = json::array();
    json im = json::array();
    for (int i = 0; i < n; ++i) {
        json re_row = json::array();
        json im_row = json::array();
        for (int j = 0; j < n; ++j) {
            re_row.push_back(rho.entries()(i, j).real());
            im_row.push_back(rho.entries()(i, j).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    json out{{"n", n}, {"beta", rho.beta()}, {"re", std::move(re)}};
    if (rho.field() == Field::Complex) {
        out["im"] = std::move(im);
    }
    return out;
}

DensityMatrix density_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("beta") || !j.contains("re")) {
        throw DomainError("state file: expected object with n, beta, re");
    }
    const int n = j.at("n").get<int>();
    const int beta = j.at("beta").get<int>();
    if (n < 1) {
        throw DomainError("state file: n must be >= 1");
    }
    if (beta != 1 && beta != 2) {
        throw DomainError("state file: beta must be 1 or 2");
    }
    const Field field = beta == 1 ? Field::Real : Field::Complex;
    const json& re = j.at("re");
    const bool has_im = j.contains("im");
    if (beta == 1 && has_im) {
        throw DomainError("state file: beta = 1 forbids an im block");
    }
    auto read_matrix = [n](const json& rows, const char* what) {
        if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
            throw DomainError(std::string("state file: ") + what + " must be an n x n array");
        }
        Eigen::MatrixXd m(n, n);
        for (int i = 0; i < n; ++i) {
            const json& row = rows.at(i);
            if (!row.is_array() || static_cast<int>(row.size()) != n) {
                throw DomainError(std::string("state file: ") + what + " must be an n x n array");
            }
            for (int k = 0; k < n; ++k) {
                m(i, k) = row.at(k).get<double>();
            }
        }
        return m;
    };
    const Eigen::MatrixXd re_m = read_matrix(re, "re");
    Eigen::MatrixXd im_m = Eigen::MatrixXd::Zero(n, n);
    if (has_im) {
        im_m = read_matrix(j.at("im"), "im");
    }
    Matrix m(n, n);
    m.real() = re_m;
    m.imag() = im_m;
    return DensityMatrix::make(HermMatrix::make(m, field));
}

DensityMatrix load_density(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot open state file " + path.string());
    }
    json j;
    in >> j;
    return density_from_json(j);
}

void save_density(const DensityMatrix& rho, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw DomainError("cannot write state file " + path.string());
    }
    out << density_to_json(rho).dump() << "\n";
}

} // namespace buresgeom
