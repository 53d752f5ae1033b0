#include "lb/kernels.hpp"

#ifndef LB_AVX2_COMPILED
#define LB_AVX2_COMPILED 0
#endif

namespace lb {

// Profile-compiled kernel entry points (one object file per profile).
#define LB_DECLARE_PROFILE(ns)                                                              \
    namespace profiles::ns {                                                                \
    void step_aos_kernel(const cplx*, const cplx*, cplx*, std::size_t);                     \
    void step_soa_kernel(const double*, const double*, const double*, const double*,        \
                         double*, double*, std::size_t);                                    \
    }

LB_DECLARE_PROFILE(baseline)
LB_DECLARE_PROFILE(opt)
LB_DECLARE_PROFILE(native)
LB_DECLARE_PROFILE(native_fast)

#undef LB_DECLARE_PROFILE

#if LB_AVX2_COMPILED
namespace simd_avx2 {
void step_simd_kernel(const cplx*, const cplx*, cplx*, std::size_t);
}
#endif

const char* to_string(Variant v) {
    switch (v) {
        case Variant::aos: return "aos";
        case Variant::soa: return "soa";
        case Variant::simd: return "simd";
    }
    return "?";
}

std::optional<Variant> variant_from_string(std::string_view s) {
    if (s == "aos") return Variant::aos;
    if (s == "soa") return Variant::soa;
    if (s == "simd") return Variant::simd;
    return std::nullopt;
}

const std::vector<KernelProfile>& kernel_profiles() {
    static const std::vector<KernelProfile> table = {
        {"baseline", profiles::baseline::step_aos_kernel, profiles::baseline::step_soa_kernel},
        {"opt", profiles::opt::step_aos_kernel, profiles::opt::step_soa_kernel},
        {"native", profiles::native::step_aos_kernel, profiles::native::step_soa_kernel},
        {"native-fast", profiles::native_fast::step_aos_kernel,
         profiles::native_fast::step_soa_kernel},
    };
    return table;
}

const KernelProfile* find_profile(std::string_view name) {
    for (const auto& p : kernel_profiles())
        if (p.name == name) return &p;
    return nullptr;
}

const KernelProfile& default_profile() {
    if (const KernelProfile* p = find_profile("native-fast")) return *p;
    return kernel_profiles().back();
}

bool simd_available() {
#if LB_AVX2_COMPILED
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

StepAoSFn simd_kernel() {
#if LB_AVX2_COMPILED
    if (simd_available()) return simd_avx2::step_simd_kernel;
#endif
    return nullptr;
}

}  // namespace lb
