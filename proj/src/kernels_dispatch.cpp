#include "ralt/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace ralt::kernels {
namespace {

struct Selection {
  const Ops* ops;
  const char* name;
};

Selection select() {
  bool want_avx2 = false;
#if defined(RALT_BUILD_AVX2) && defined(__AVX2__)
  want_avx2 = __builtin_cpu_supports("avx2");
#endif
  if (const char* env = std::getenv("RALT_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) want_avx2 = false;
#if defined(RALT_BUILD_AVX2) && defined(__AVX2__)
    if (std::strcmp(env, "avx2") == 0 && __builtin_cpu_supports("avx2"))
      want_avx2 = true;
#endif
  }
#if defined(RALT_BUILD_AVX2) && defined(__AVX2__)
  if (want_avx2) return {&avx2_ops(), "avx2"};
#endif
  return {&scalar_ops(), "scalar"};
}

const Selection& selection() {
  static const Selection s = select();
  return s;
}

}  // namespace

const Ops* try_avx2_ops() {
#if defined(RALT_BUILD_AVX2) && defined(__AVX2__)
  if (__builtin_cpu_supports("avx2")) return &avx2_ops();
#endif
  return nullptr;
}

const Ops& active_ops() { return *selection().ops; }

std::string active_backend_name() { return selection().name; }

}  // namespace ralt::kernels
