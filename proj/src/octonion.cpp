#include "g2grad/octonion.hpp"

#include <sstream>
#include <stdexcept>

namespace g2grad {

namespace {

constexpr const char* kNames[kOctDim] = {"e1", "e2", "u1", "u2",
                                         "u3", "v1", "v2", "v3"};

struct Entry {
  int sign;   // 0 means the product vanishes
  int index;  // basis slot of the product when sign != 0
};

// Structure constants: kTable[i][j] describes basis(i) * basis(j).
// e1, e2 are orthogonal idempotents; u_i u_j = eps_ijk v_k,
// v_i v_j = -eps_ijk u_k, u_i v_i = e1, v_i u_i = e2,
// e1 u = u = u e2, e2 v = v = v e1, everything else vanishes.
constexpr Entry kTable[kOctDim][kOctDim] = {
    // e1:
    {{1, kE1}, {0, -1}, {1, kU1}, {1, kU2}, {1, kU3}, {0, -1}, {0, -1}, {0, -1}},
    // e2:
    {{0, -1}, {1, kE2}, {0, -1}, {0, -1}, {0, -1}, {1, kV1}, {1, kV2}, {1, kV3}},
    // u1:
    {{0, -1}, {1, kU1}, {0, -1}, {1, kV3}, {-1, kV2}, {1, kE1}, {0, -1}, {0, -1}},
    // u2:
    {{0, -1}, {1, kU2}, {-1, kV3}, {0, -1}, {1, kV1}, {0, -1}, {1, kE1}, {0, -1}},
    // u3:
    {{0, -1}, {1, kU3}, {1, kV2}, {-1, kV1}, {0, -1}, {0, -1}, {0, -1}, {1, kE1}},
    // v1:
    {{1, kV1}, {0, -1}, {1, kE2}, {0, -1}, {0, -1}, {0, -1}, {-1, kU3}, {1, kU2}},
    // v2:
    {{1, kV2}, {0, -1}, {0, -1}, {1, kE2}, {0, -1}, {1, kU3}, {0, -1}, {-1, kU1}},
    // v3:
    {{1, kV3}, {0, -1}, {0, -1}, {0, -1}, {1, kE2}, {-1, kU2}, {1, kU1}, {0, -1}},
};

}  // namespace

const char* oct_basis_name(int i) {
  if (i < 0 || i >= kOctDim) throw std::invalid_argument("basis index");
  return kNames[i];
}

Oct Oct::basis(int i) {
  if (i < 0 || i >= kOctDim) throw std::invalid_argument("basis index");
  Oct x;
  x.c[i] = Cyc::one();
  return x;
}

Oct Oct::one() {
  Oct x;
  x.c[kE1] = Cyc::one();
  x.c[kE2] = Cyc::one();
  return x;
}

bool Oct::is_zero() const {
  for (const auto& s : c)
    if (!s.is_zero()) return false;
  return true;
}

Oct Oct::operator-() const {
  Oct out;
  for (int i = 0; i < kOctDim; ++i) out.c[i] = -c[i];
  return out;
}

Oct& Oct::operator+=(const Oct& o) {
  for (int i = 0; i < kOctDim; ++i) c[i] += o.c[i];
  return *this;
}

Oct& Oct::operator-=(const Oct& o) {
  for (int i = 0; i < kOctDim; ++i) c[i] -= o.c[i];
  return *this;
}

Oct operator*(const Cyc& s, Oct x) {
  for (auto& coeff : x.c) coeff *= s;
  return x;
}

Oct oct_from_vec(const Vec& v) {
  if (v.size() != kOctDim)
    throw std::invalid_argument("octonion vector must have 8 coordinates");
  Oct x;
  for (int i = 0; i < kOctDim; ++i) x.c[i] = v[i];
  return x;
}

Vec oct_to_vec(const Oct& x) { return Vec(x.c.begin(), x.c.end()); }

int table_product(int i, int j, int* sign) {
  if (i < 0 || i >= kOctDim || j < 0 || j >= kOctDim)
    throw std::invalid_argument("basis index");
  const Entry& e = kTable[i][j];
  if (sign) *sign = e.sign;
  return e.sign ? e.index : -1;
}

Oct oct_mul(const Oct& a, const Oct& b) {
  Oct out;
  for (int i = 0; i < kOctDim; ++i) {
    if (a.c[i].is_zero()) continue;
    for (int j = 0; j < kOctDim; ++j) {
      const Entry& e = kTable[i][j];
      if (e.sign == 0 || b.c[j].is_zero()) continue;
      Cyc term = a.c[i] * b.c[j];
      if (e.sign < 0)
        out.c[e.index] -= term;
      else
        out.c[e.index] += term;
    }
  }
  return out;
}

namespace {

using Triple = std::array<Cyc, 3>;

Triple cross(const Triple& a, const Triple& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

Cyc dot(const Triple& a, const Triple& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

}  // namespace

Oct zorn_mul(const Oct& a, const Oct& b) {
  const Cyc& al = a.c[kE1];
  const Cyc& be = a.c[kE2];
  const Triple u = {a.c[kU1], a.c[kU2], a.c[kU3]};
  const Triple v = {a.c[kV1], a.c[kV2], a.c[kV3]};
  const Cyc& al2 = b.c[kE1];
  const Cyc& be2 = b.c[kE2];
  const Triple u2 = {b.c[kU1], b.c[kU2], b.c[kU3]};
  const Triple v2 = {b.c[kV1], b.c[kV2], b.c[kV3]};

  const Cyc out_al = al * al2 + dot(u, v2);
  const Cyc out_be = be * be2 + dot(v, u2);
  const Triple vxv = cross(v, v2);
  const Triple uxu = cross(u, u2);
  Oct out;
  out.c[kE1] = out_al;
  out.c[kE2] = out_be;
  for (int i = 0; i < 3; ++i) {
    out.c[kU1 + i] = al * u2[i] + be2 * u[i] - vxv[i];
    out.c[kV1 + i] = al2 * v[i] + be * v2[i] + uxu[i];
  }
  return out;
}

Oct conjugate(const Oct& x) {
  Oct out;
  out.c[kE1] = x.c[kE2];
  out.c[kE2] = x.c[kE1];
  for (int i = 0; i < 3; ++i) {
    out.c[kU1 + i] = -x.c[kU1 + i];
    out.c[kV1 + i] = -x.c[kV1 + i];
  }
  return out;
}

Cyc oct_trace(const Oct& x) { return x.c[kE1] + x.c[kE2]; }

Cyc oct_norm(const Oct& x) {
  const Triple u = {x.c[kU1], x.c[kU2], x.c[kU3]};
  const Triple v = {x.c[kV1], x.c[kV2], x.c[kV3]};
  return x.c[kE1] * x.c[kE2] - dot(u, v);
}

Cyc oct_bilinear(const Oct& x, const Oct& y) {
  return oct_norm(x + y) - oct_norm(x) - oct_norm(y);
}

namespace {

std::string oct_str(const Oct& x) {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < kOctDim; ++i) {
    if (x.c[i].is_zero()) continue;
    if (!first) out << " + ";
    out << "(" << x.c[i].str() << ")*" << kNames[i];
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace

TableReport check_table() {
  TableReport report;
  for (int i = 0; i < kOctDim; ++i)
    for (int j = 0; j < kOctDim; ++j) {
      const Oct a = Oct::basis(i);
      const Oct b = Oct::basis(j);
      const Oct via_table = oct_mul(a, b);
      const Oct via_zorn = zorn_mul(a, b);
      ++report.products_checked;
      if (via_table != via_zorn) {
        report.ok = false;
        report.failures.push_back(std::string(kNames[i]) + "*" + kNames[j] +
                                  ": table gives " + oct_str(via_table) +
                                  ", Zorn form gives " + oct_str(via_zorn));
      }
    }
  const Oct one = Oct::one();
  for (int i = 0; i < kOctDim; ++i) {
    const Oct b = Oct::basis(i);
    ++report.identity_checked;
    if (oct_mul(one, b) != b || oct_mul(b, one) != b) {
      report.ok = false;
      report.failures.push_back(std::string("identity fails on ") + kNames[i]);
    }
  }
  for (int i = 0; i < kOctDim; ++i)
    for (int j = 0; j < kOctDim; ++j) {
      const Oct x = Oct::basis(i);
      const Oct y = Oct::basis(j);
      const Oct xx = oct_mul(x, x);
      ++report.alternative_checked;
      if (oct_mul(x, oct_mul(x, y)) != oct_mul(xx, y) ||
          oct_mul(oct_mul(y, x), x) != oct_mul(y, xx)) {
        report.ok = false;
        report.failures.push_back(std::string("alternative law fails on (") +
                                  kNames[i] + "," + kNames[j] + ")");
      }
    }
  return report;
}

}  // namespace g2grad
