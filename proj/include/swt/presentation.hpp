#ifndef SWT_PRESENTATION_HPP
#define SWT_PRESENTATION_HPP

#include <string>
#include <vector>

#include "swt/error.hpp"
#include "swt/lattice.hpp"
#include "swt/matrix.hpp"

namespace swt {

/// M(g, N, h): genus g, N handles, and h^* on H^1(Σ_{g+N}) in the basis
/// (c_1..c_N, d_1..d_N, x_1..x_2g).
struct Presentation {
  int g = 0;
  int N = 0;
  IntMatrix monodromy;
  std::string name;

  int genus() const { return g + N; }
  SurfaceModel model() const { return SurfaceModel::split(N, g); }

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

struct Violation {
  std::string name;
  std::string detail;
};

inline std::vector<Violation> validate_presentation(const Presentation& p) {
  std::vector<Violation> out;
  if (p.g < 0 || p.N < 0) {
    out.push_back({"range", "genus and handles must be nonnegative"});
    return out;
  }
  const std::size_t want = 2 * static_cast<std::size_t>(p.genus());
  if (p.monodromy.rows() != want || p.monodromy.cols() != want) {
    out.push_back({"dimension", "monodromy is " + std::to_string(p.monodromy.rows()) + "x" +
                                    std::to_string(p.monodromy.cols()) + ", expected " + std::to_string(want) + "x" +
                                    std::to_string(want)});
    return out;
  }
  if (!is_symplectic(p.model(), p.monodromy)) out.push_back({"symplectic", "A^T J A != J"});
  return out;
}

inline std::string describe(const std::vector<Violation>& vs) {
  std::string s;
  for (const auto& v : vs) s += (s.empty() ? "" : "; ") + v.name + ": " + v.detail;
  return s;
}

/// The monodromy as a MappingClass; throws InvalidPresentation listing the
/// violations otherwise.
inline MappingClass mapping_class(const Presentation& p) {
  if (auto vs = validate_presentation(p); !vs.empty()) throw InvalidPresentation(describe(vs));
  return MappingClass(p.model(), p.monodromy);
}

inline Presentation make_presentation(int g, int N, const MappingClass& a, std::string name = {}) {
  if (!(a.model() == SurfaceModel::split(N, g))) throw DimensionMismatch("mapping class is not on the split surface");
  return Presentation{g, N, a.matrix(), std::move(name)};
}

}  // namespace swt

#endif  // SWT_PRESENTATION_HPP
