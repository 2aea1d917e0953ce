#include "hopf/hopf_calculus.hpp"

#include <random>

#include "hopf/seed.hpp"

namespace hopf {

namespace {

const IntMatrix& meridian_flip() {
  static const IntMatrix flip = IntMatrix::diagonal({1, 1, -1});
  return flip;
}

IntMatrix product(const std::vector<IntMatrix>& factors) {
  IntMatrix acc = IntMatrix::identity(3);
  for (const auto& f : factors) acc = acc * f;
  return acc;
}

IntMatrix embed_upper_left(const IntMatrix& block) {
  IntMatrix m = IntMatrix::identity(3);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) m(r, c) = block(r, c);
  return m;
}

bool is_3x3(const IntMatrix& m) { return m.rows() == 3 && m.cols() == 3; }

}  // namespace

GluingMatrix::GluingMatrix(UnimodularMatrix m) : m_(std::move(m)) {
  if (m_.size() != 3) throw ShapeError("gluing matrix must be 3x3");
}

LogTransformParams::LogTransformParams(Integer a, Integer b, Integer p)
    : a_(std::move(a)),
      b_(std::move(b)),
      p_(std::move(p)),
      completion_(complete_primitive_to_sl3({a_, b_, p_})) {}

LogTransformParams::LogTransformParams(Integer a, Integer b, Integer p,
                                       UnimodularMatrix completion)
    : a_(std::move(a)), b_(std::move(b)), p_(std::move(p)), completion_(std::move(completion)) {
  if (completion_.size() != 3) throw ShapeError("completion must be 3x3");
  if (completion_.det() != 1) throw OrientationError("completion must have determinant +1");
  if (completion_(0, 2) != a_ || completion_(1, 2) != b_ || completion_(2, 2) != p_) {
    throw std::invalid_argument("completion third column is not (" + a_.get_str() + "," +
                                b_.get_str() + "," + p_.get_str() + ")");
  }
}

NormalForm::NormalForm(IntMatrix block) : block_(std::move(block)) {
  if (block_.rows() != 2 || block_.cols() != 2) throw ShapeError("normal-form block must be 2x2");
  if (determinant(block_) != 1) throw std::invalid_argument("normal-form block must have det 1");
}

IntMatrix NormalForm::matrix() const {
  IntMatrix m = embed_upper_left(block_);
  m(0, 2) = 1;
  return m;
}

bool NormalForm::has_shape(const IntMatrix& m) {
  if (!is_3x3(m)) return false;
  if (m(0, 2) != 1 || m(1, 2) != 0 || m(2, 2) != 1) return false;
  if (m(2, 0) != 0 || m(2, 1) != 0) return false;
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) == 1;
}

std::string_view zeta_variant_name(ZetaVariant v) {
  switch (v) {
    case ZetaVariant::Raw: return "raw";
    case ZetaVariant::FlipLeft: return "flip-left";
    case ZetaVariant::FlipRight: return "flip-right";
    case ZetaVariant::FlipBoth: return "flip-both";
  }
  return "raw";
}

std::optional<ZetaVariant> parse_zeta_variant(std::string_view name) {
  for (auto v : {ZetaVariant::Raw, ZetaVariant::FlipLeft, ZetaVariant::FlipRight,
                 ZetaVariant::FlipBoth}) {
    if (zeta_variant_name(v) == name) return v;
  }
  return std::nullopt;
}

GluingMatrix zeta_matrix() { return GluingMatrix(IntMatrix{{1, 0, 1}, {0, 1, 0}, {0, 0, -1}}); }

GluingMatrix zeta_matrix(ZetaVariant variant) {
  IntMatrix z = zeta_matrix().matrix();
  if (variant == ZetaVariant::FlipLeft || variant == ZetaVariant::FlipBoth) z = meridian_flip() * z;
  if (variant == ZetaVariant::FlipRight || variant == ZetaVariant::FlipBoth) z = z * meridian_flip();
  return GluingMatrix(std::move(z));
}

bool is_extendable(const IntMatrix& m) {
  if (!is_3x3(m)) return false;
  if (m(0, 2) != 0 || m(1, 2) != 0 || m(2, 2) != 1) return false;
  return determinant(m) == 1;
}

bool is_extendable(const GluingMatrix& m) { return is_extendable(m.matrix()); }

GluingMatrix normalize_to_sl3(const GluingMatrix& m) {
  if (m.det() == 1) return m;
  return GluingMatrix(m.matrix() * meridian_flip());
}

FgAbelianGroup pi1_single_gluing(const GluingMatrix& m) {
  const Integer mu = gcd(m.g(), m.h());
  if (mu == 0) return FgAbelianGroup::free(2);
  if (mu == 1) return FgAbelianGroup::free(1);
  return FgAbelianGroup(1, {mu});
}

bool is_homology_hopf(const GluingMatrix& m) { return gcd(m.g(), m.h()) == 1; }

GluingMatrix compose_two_fiber(const LogTransformParams& plus, const LogTransformParams& minus,
                               ZetaVariant variant) {
  const IntMatrix composed = inverse_unimodular(plus.completion()).matrix() *
                             zeta_matrix(variant).matrix() * minus.completion().matrix();
  return GluingMatrix(composed);
}

FgAbelianGroup pi1_two_log_transforms(const Integer& a, const Integer& b, const Integer& p,
                                      const Integer& c, const Integer& d, const Integer& q) {
  if (gcd(gcd(a, b), p) != 1) {
    throw NotPrimitiveError("(" + a.get_str() + "," + b.get_str() + "," + p.get_str() +
                            ") is not primitive");
  }
  if (gcd(gcd(c, d), q) != 1) {
    throw NotPrimitiveError("(" + c.get_str() + "," + d.get_str() + "," + q.get_str() +
                            ") is not primitive");
  }
  // alpha^a beta^b (alpha gamma^-1)^p = 1 and alpha^c beta^d gamma^q = 1
  Presentation pres{3, {{a + p, b, -p}, {c, d, q}}};
  return group_from_presentation(pres);
}

std::pair<NormalForm, ReductionCertificate> reduce_to_normal_form(const GluingMatrix& m) {
  if (m.det() != 1) {
    throw OrientationError("gluing matrix has det -1; apply normalize_to_sl3 first");
  }
  const Integer mu = gcd(m.g(), m.h());
  if (mu != 1) {
    throw NotHomologyHopfError("not a homology Hopf surface: gcd(g,h) = gcd(" + m.g().get_str() +
                               "," + m.h().get_str() + ") = " + mu.get_str());
  }

  ReductionCertificate cert;
  cert.input = m.matrix();
  IntMatrix current = m.matrix();
  const IntMatrix id = IntMatrix::identity(3);

  // (g, h) -> (1, 0) by an Sl(2,Z) block acting on the first two rows.
  const IntMatrix carry = embed_upper_left(sl2_carry_to_e1(current(0, 2), current(1, 2)).matrix());
  std::vector<IntMatrix> left_applied;
  if (carry != id) {
    current = carry * current;
    left_applied.push_back(carry);
  }

  // k -> 1: add -(k-1) times row 0 to row 2.
  if (current(2, 2) != 1) {
    IntMatrix shear = IntMatrix::identity(3);
    shear(2, 0) = -(current(2, 2) - 1);
    current = shear * current;
    left_applied.push_back(shear);
  }

  // e, f -> 0: subtract e resp. f times column 2 from columns 0 and 1.
  if (current(2, 0) != 0 || current(2, 1) != 0) {
    IntMatrix shear = IntMatrix::identity(3);
    shear(2, 0) = -current(2, 0);
    shear(2, 1) = -current(2, 1);
    current = current * shear;
    cert.right_factors.push_back(shear);
  }

  // Later left moves are outermost.
  cert.left_factors.assign(left_applied.rbegin(), left_applied.rend());
  cert.output = current;

  IntMatrix block(2, 2, {current(0, 0), current(0, 1), current(1, 0), current(1, 1)});
  return {NormalForm(std::move(block)), std::move(cert)};
}

IntMatrix standard_form_matrix() { return IntMatrix{{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}; }

ReductionCertificate reduce_to_standard(const GluingMatrix& m) {
  auto [form, cert] = reduce_to_normal_form(m);
  const IntMatrix& blk = form.block();
  // Embedded inverse of the framing block: [[d, -c], [-b, a]].
  IntMatrix undo(2, 2, {blk(1, 1), -blk(0, 1), -blk(1, 0), blk(0, 0)});
  const IntMatrix right = embed_upper_left(undo);
  if (right != IntMatrix::identity(3)) {
    cert.output = cert.output * right;
    cert.right_factors.push_back(right);
  }
  if (cert.output != standard_form_matrix() || !verify_certificate(cert)) {
    throw std::logic_error("reduction to the standard form failed for " + m.matrix().to_string());
  }
  return cert;
}

CertificateCheck check_certificate(const ReductionCertificate& cert) {
  if (!is_3x3(cert.input) || !is_3x3(cert.output)) return {false, "input/output must be 3x3"};
  for (std::size_t i = 0; i < cert.left_factors.size(); ++i) {
    if (!is_extendable(cert.left_factors[i])) {
      return {false, "left_factors[" + std::to_string(i) + "] is not extendable"};
    }
  }
  for (std::size_t i = 0; i < cert.right_factors.size(); ++i) {
    if (!is_extendable(cert.right_factors[i])) {
      return {false, "right_factors[" + std::to_string(i) + "] is not extendable"};
    }
  }
  if (product(cert.left_factors) * cert.input * product(cert.right_factors) != cert.output) {
    return {false, "product identity does not hold"};
  }
  return {};
}

bool verify_certificate(const ReductionCertificate& cert) { return check_certificate(cert).valid; }

IntMatrix framing_block(const NormalForm& n) { return n.block(); }

std::array<Integer, 3> random_primitive_triple(std::uint64_t seed, long bound) {
  std::mt19937_64 rng(seed);
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  while (true) {
    std::array<Integer, 3> v;
    for (auto& x : v) x = static_cast<long>(rng() % span) - bound;
    if (gcd(gcd(v[0], v[1]), v[2]) == 1) return v;
  }
}

UnimodularMatrix random_extendable(std::uint64_t seed, std::size_t word_length) {
  std::mt19937_64 rng(seed);
  IntMatrix m = IntMatrix::identity(3);
  // Generators: E_01(+-1), E_10(+-1) on the block and E_20(+-1), E_21(+-1) on the bottom row.
  static constexpr std::array<std::pair<std::size_t, std::size_t>, 4> kPositions{
      {{0, 1}, {1, 0}, {2, 0}, {2, 1}}};
  for (std::size_t i = 0; i < word_length; ++i) {
    const std::uint64_t draw = rng() % 8;
    const auto [row, col] = kPositions[draw / 2];
    m.add_row_multiple(row, col, draw % 2 == 0 ? 1 : -1);
  }
  return UnimodularMatrix(std::move(m));
}

UnimodularMatrix random_completion(const std::array<Integer, 3>& v, std::uint64_t seed) {
  return complete_primitive_to_sl3(v) * random_extendable(seed, 8);
}

bool variant_agrees(ZetaVariant variant, std::uint64_t seed, std::size_t samples) {
  for (std::size_t i = 0; i < samples; ++i) {
    const auto plus = random_primitive_triple(mix_seed(seed, 4 * i), 20);
    const auto minus = random_primitive_triple(mix_seed(seed, 4 * i + 1), 20);
    const LogTransformParams lp(plus[0], plus[1], plus[2],
                                random_completion(plus, mix_seed(seed, 4 * i + 2)));
    const LogTransformParams lm(minus[0], minus[1], minus[2],
                                random_completion(minus, mix_seed(seed, 4 * i + 3)));
    const auto direct = pi1_two_log_transforms(plus[0], plus[1], plus[2], minus[0], minus[1],
                                               minus[2]);
    if (!is_isomorphic(direct, pi1_single_gluing(compose_two_fiber(lp, lm, variant)))) {
      return false;
    }
  }
  return true;
}

ZetaVariant calibrate_zeta(std::uint64_t seed, std::size_t samples) {
  for (auto v : {ZetaVariant::Raw, ZetaVariant::FlipLeft, ZetaVariant::FlipRight,
                 ZetaVariant::FlipBoth}) {
    if (variant_agrees(v, seed, samples)) return v;
  }
  throw std::runtime_error("no zeta sign convention reconciles the two pi1 computations");
}

ZetaVariant calibrated_zeta() {
  static const ZetaVariant variant = calibrate_zeta(0x484f5046ULL, 256);
  return variant;
}

}  // namespace hopf
