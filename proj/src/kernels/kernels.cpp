#include "mmbp/kernels.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace mmbp::kernels {

std::vector<const Ops*> available() {
  std::vector<const Ops*> out{&scalar()};
  if (const Ops* ops = avx2()) out.push_back(ops);
  if (const Ops* ops = neon()) out.push_back(ops);
  return out;
}

namespace {

const Ops& pick_active() {
  if (const char* want = std::getenv("MMBP_KERNEL")) {
    if (std::strcmp(want, "scalar") == 0) return scalar();
    for (const Ops* ops : available())
      if (std::strcmp(ops->name, want) == 0) return *ops;
    std::fprintf(stderr,
                 "mmbp: kernel '%s' unavailable on this machine, "
                 "using scalar\n",
                 want);
    return scalar();
  }
  if (const Ops* ops = avx2()) return *ops;
  if (const Ops* ops = neon()) return *ops;
  return scalar();
}

}  // namespace

const Ops& active() {
  static const Ops& ops = pick_active();
  return ops;
}

}  // namespace mmbp::kernels
