#include "lb/model_io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "lb/complex_matrix.hpp"

namespace lb {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_number(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return x;
    } catch (const std::exception&) {
        throw std::runtime_error("model file: bad numeric value for '" + key + "': " + value);
    }
}

}  // namespace

LindbladModel read_model(std::istream& is) {
    std::optional<std::size_t> dim;
    std::optional<MatrixAoS> hamiltonian;
    std::vector<MatrixAoS> collapse_ops;

    bool preset_transmon = false;
    double t1 = kTransmonT1;
    double tphi = kTransmonTphi;
    double anharmonicity = kTransmonAnharmonicity;
    double drive_amp = kTransmonDriveAmp;

    std::string line;
    while (std::getline(is, line)) {
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;

        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("model file: expected 'key = value', got: " + stripped);
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));

        if (key == "dim") {
            const double x = parse_number(key, value);
            if (x < 1 || x != static_cast<std::size_t>(x))
                throw std::runtime_error("model file: dim must be a positive integer");
            dim = static_cast<std::size_t>(x);
        } else if (key == "hamiltonian") {
            if (!value.empty())
                throw std::runtime_error("model file: matrix must start on the line after '" +
                                         key + " ='");
            if (hamiltonian)
                throw std::runtime_error("model file: duplicate hamiltonian");
            hamiltonian = read_matrix(is);
        } else if (key == "collapse") {
            if (!value.empty())
                throw std::runtime_error("model file: matrix must start on the line after '" +
                                         key + " ='");
            collapse_ops.push_back(read_matrix(is));
        } else if (key == "preset") {
            if (value != "transmon")
                throw std::runtime_error("model file: unknown preset: " + value);
            preset_transmon = true;
        } else if (key == "t1") {
            t1 = parse_number(key, value);
        } else if (key == "tphi") {
            tphi = parse_number(key, value);
        } else if (key == "anharmonicity") {
            anharmonicity = parse_number(key, value);
        } else if (key == "drive_amp") {
            drive_amp = parse_number(key, value);
        } else {
            throw std::runtime_error("model file: unknown key: " + key);
        }
    }

    if (preset_transmon) {
        if (dim || hamiltonian || !collapse_ops.empty())
            throw std::runtime_error(
                "model file: preset = transmon excludes dim/hamiltonian/collapse keys");
        return transmon_model(t1, tphi, anharmonicity, drive_amp);
    }

    if (!dim) throw std::runtime_error("model file: missing dim");
    if (!hamiltonian) throw std::runtime_error("model file: missing hamiltonian");
    if (hamiltonian->rows != *dim || hamiltonian->cols != *dim)
        throw std::runtime_error("model file: hamiltonian shape does not match dim");
    for (const auto& l : collapse_ops)
        if (l.rows != *dim || l.cols != *dim)
            throw std::runtime_error("model file: collapse operator shape does not match dim");

    return make_model(std::move(*hamiltonian), std::move(collapse_ops));
}

LindbladModel read_model_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("model file: cannot open " + path);
    return read_model(is);
}

}  // namespace lb
