#include <cstdlib>
#include <string_view>

#include "veckin/kernels.hpp"

namespace veckin::kernels {

#if VECKIN_HAVE_AVX2
extern const Ops avx2_ops;
#endif

namespace {

bool cpu_has_avx2() {
#if defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const Ops* select() {
  std::string_view want = "auto";
  if (const char* env = std::getenv("VECKIN_SIMD")) want = env;
  if (want == "scalar") return &scalar_ops;
#if VECKIN_HAVE_AVX2
  if (want == "avx2") return &avx2_ops;
  if (want == "auto" && cpu_has_avx2()) return &avx2_ops;
#endif
  return &scalar_ops;
}

}  // namespace

const Ops& active() {
  static const Ops* ops = select();
  return *ops;
}

const Ops* get(std::string_view name) {
  if (name == "scalar") return &scalar_ops;
#if VECKIN_HAVE_AVX2
  if (name == "avx2" && cpu_has_avx2()) return &avx2_ops;
#endif
  return nullptr;
}

}  // namespace veckin::kernels
