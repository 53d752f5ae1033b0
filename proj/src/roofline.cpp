#include "lb/roofline.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>

namespace lb {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string basename_stem(const std::string& path) {
    const std::size_t slash = path.find_last_of("/\\");
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    const std::size_t dot = base.find_last_of('.');
    return dot == std::string::npos || dot == 0 ? base : base.substr(0, dot);
}

}  // namespace

const char* to_string(CacheLevel level) {
    switch (level) {
        case CacheLevel::L1: return "L1";
        case CacheLevel::L2: return "L2";
        case CacheLevel::L3: return "L3";
        case CacheLevel::DRAM: return "DRAM";
    }
    return "?";
}

const char* to_string(Bound bound) {
    return bound == Bound::memory_bound ? "memory_bound" : "compute_bound";
}

void validate_profile(const MachineProfile& m) {
    if (!(m.peak_gflops > 0.0))
        throw std::invalid_argument("machine profile: peak_gflops must be positive");
    for (double bw : m.bandwidth_gbs)
        if (!(bw > 0.0))
            throw std::invalid_argument("machine profile: bandwidths must be positive");
    for (std::uint64_t cap : m.capacity_bytes)
        if (cap == 0) throw std::invalid_argument("machine profile: capacities must be positive");
    for (std::size_t i = 1; i < m.bandwidth_gbs.size(); ++i)
        if (!(m.bandwidth_gbs[i - 1] > m.bandwidth_gbs[i]))
            throw std::invalid_argument(
                "machine profile: bandwidths must decrease strictly L1 > L2 > L3 > DRAM");
    for (std::size_t i = 1; i < m.capacity_bytes.size(); ++i)
        if (!(m.capacity_bytes[i - 1] < m.capacity_bytes[i]))
            throw std::invalid_argument(
                "machine profile: capacities must increase strictly L1 < L2 < L3");
}

KernelCharacter characterize(std::size_t d) {
    if (d < 1) throw std::invalid_argument("characterize: d must be >= 1");
    const std::uint64_t d2 = std::uint64_t(d) * d;
    const std::uint64_t d4 = d2 * d2;

    KernelCharacter k;
    k.dim = d;
    k.flops = 8 * d4;
    k.bytes = (d4 + 2 * d2) * 16;
    k.ai = double(k.flops) / double(k.bytes);
    k.working_set_bytes = k.bytes;
    return k;
}

KernelCharacter place(KernelCharacter k, const MachineProfile& m) {
    validate_profile(m);
    if (k.working_set_bytes <= m.capacity_bytes[0])
        k.placement = CacheLevel::L1;
    else if (k.working_set_bytes <= m.capacity_bytes[1])
        k.placement = CacheLevel::L2;
    else if (k.working_set_bytes <= m.capacity_bytes[2])
        k.placement = CacheLevel::L3;
    else
        k.placement = CacheLevel::DRAM;
    return k;
}

double ridge_point(const MachineProfile& m, CacheLevel level) {
    return m.peak_gflops / m.bandwidth(level);
}

Classification classify(const KernelCharacter& k, const MachineProfile& m) {
    if (!k.placement) throw std::invalid_argument("classify: placement is unset; call place()");
    Classification c;
    c.bound = k.ai < ridge_point(m, *k.placement) ? Bound::memory_bound : Bound::compute_bound;
    c.attainable_gflops = std::min(m.peak_gflops, k.ai * m.bandwidth(*k.placement));
    return c;
}

const MachineProfile& builtin_profile() {
    static const MachineProfile m{
        "i9-13980HX",
        128.0,
        {250.0, 150.0, 100.0, 80.0},
        {48ull * 1024, 2ull * 1024 * 1024, 36ull * 1024 * 1024},
    };
    return m;
}

MachineProfile read_profile(std::istream& is, const std::string& name) {
    std::map<std::string, double> values;
    std::string line;
    while (std::getline(is, line)) {
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("machine profile: expected 'key = value', got: " + stripped);
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        try {
            std::size_t pos = 0;
            const double x = std::stod(value, &pos);
            if (pos != value.size()) throw std::invalid_argument(value);
            if (!values.emplace(key, x).second)
                throw std::runtime_error("machine profile: duplicate key: " + key);
            continue;
        } catch (const std::runtime_error&) {
            throw;
        } catch (const std::exception&) {
            throw std::runtime_error("machine profile: bad numeric value for '" + key +
                                     "': " + value);
        }
    }

    static const char* const required[] = {"peak_gflops", "bw_l1", "bw_l2",  "bw_l3",
                                           "bw_dram",     "cap_l1", "cap_l2", "cap_l3"};
    for (const char* key : required)
        if (!values.count(key))
            throw std::runtime_error(std::string("machine profile: missing key: ") + key);
    if (values.size() != std::size(required))
        for (const auto& [key, unused] : values) {
            bool known = false;
            for (const char* k : required) known = known || key == k;
            if (!known) throw std::runtime_error("machine profile: unknown key: " + key);
        }

    MachineProfile m;
    m.name = name;
    m.peak_gflops = values["peak_gflops"];
    m.bandwidth_gbs = {values["bw_l1"], values["bw_l2"], values["bw_l3"], values["bw_dram"]};
    for (const char* key : {"cap_l1", "cap_l2", "cap_l3"}) {
        const double cap = values[key];
        if (cap < 0 || cap != static_cast<std::uint64_t>(cap))
            throw std::runtime_error(std::string("machine profile: ") + key +
                                     " must be a nonnegative integer byte count");
    }
    m.capacity_bytes = {static_cast<std::uint64_t>(values["cap_l1"]),
                        static_cast<std::uint64_t>(values["cap_l2"]),
                        static_cast<std::uint64_t>(values["cap_l3"])};
    validate_profile(m);
    return m;
}

MachineProfile read_profile_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("machine profile: cannot open " + path);
    return read_profile(is, basename_stem(path));
}

void write_profile(std::ostream& os, const MachineProfile& m) {
    os << "# machine profile: " << m.name << "\n";
    os << "peak_gflops = " << m.peak_gflops << "\n";
    os << "bw_l1 = " << m.bandwidth_gbs[0] << "\n";
    os << "bw_l2 = " << m.bandwidth_gbs[1] << "\n";
    os << "bw_l3 = " << m.bandwidth_gbs[2] << "\n";
    os << "bw_dram = " << m.bandwidth_gbs[3] << "\n";
    os << "cap_l1 = " << m.capacity_bytes[0] << "\n";
    os << "cap_l2 = " << m.capacity_bytes[1] << "\n";
    os << "cap_l3 = " << m.capacity_bytes[2] << "\n";
}

}  // namespace lb
