#include "fcyc/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace fcyc {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

unsigned Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition Partition::parse(std::string_view text) {
  std::vector<unsigned> parts;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto tok = text.substr(0, comma);
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
      throw std::invalid_argument("malformed partition part '" + std::string(tok) + "'");
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
    throw std::invalid_argument("partition parts must be weakly decreasing");
  return Partition(std::move(parts));
}

Partition conjugate(const Partition& p) {
  std::vector<unsigned> c(p[0], 0);
  for (unsigned part : p.parts())
    for (unsigned j = 0; j < part; ++j) ++c[j];
  return Partition(std::move(c));
}

PartitionVectors partition_vectors(const Partition& p) {
  PartitionVectors out;
  const unsigned top = p[0];
  out.m.assign(top, 0);
  for (unsigned part : p.parts()) ++out.m[part - 1];
  Partition c = conjugate(p);
  unsigned run = 0;
  for (unsigned i = 0; i < top; ++i) {
    run += c[i];
    out.ell.push_back(run);
  }
  std::vector<unsigned> nz;
  for (unsigned mi : out.m)
    if (mi) nz.push_back(mi);
  out.e = conjugate(Partition(std::move(nz))).parts();
  return out;
}

unsigned long conjugate_norm2(const Partition& p) {
  unsigned long s = 0;
  const Partition c = conjugate(p);
  for (unsigned x : c.parts()) s += static_cast<unsigned long>(x) * x;
  return s;
}

Integer centralizer_order(const Partition& p, const Integer& q) {
  auto v = partition_vectors(p);
  Integer out = 1;
  for (std::size_t i = 0; i < v.m.size(); ++i) {
    for (unsigned k = 1; k <= v.m[i]; ++k) out *= ipow(q, v.ell[i]) - ipow(q, v.ell[i] - k);
  }
  return out;
}

QPoly centralizer_order_poly(const Partition& p) {
  auto v = partition_vectors(p);
  long shift = static_cast<long>(conjugate_norm2(p));
  QPoly out = QPoly::constant(1);
  for (unsigned mi : v.m) {
    shift -= static_cast<long>(mi) * (mi + 1) / 2;
    for (unsigned k = 1; k <= mi; ++k) out = out * (QPoly::monomial(1, k) - QPoly::constant(1));
  }
  return out * QPoly::monomial(1, static_cast<unsigned>(shift));
}

Integer gl_order(unsigned n, const Integer& q) {
  Integer out = ipow(q, n * (n - 1) / 2);
  for (unsigned i = 1; i <= n; ++i) out *= ipow(q, i) - 1;
  return out;
}

QPoly gl_order_poly(unsigned n) {
  QPoly out = QPoly::monomial(1, n * (n - 1) / 2);
  for (unsigned i = 1; i <= n; ++i) out = out * (QPoly::monomial(1, i) - QPoly::constant(1));
  return out;
}

namespace {

void gen(unsigned rest, unsigned max_part, std::vector<unsigned>& cur, std::vector<Partition>& out) {
  if (rest == 0) {
    out.emplace_back(cur);
    return;
  }
  for (unsigned part = std::min(rest, max_part); part >= 1; --part) {
    cur.push_back(part);
    gen(rest - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(unsigned n, PartitionFilter filter) {
  std::vector<Partition> all;
  std::vector<unsigned> cur;
  gen(n, n, cur, all);
  if (filter == PartitionFilter::all) return all;
  std::vector<Partition> out;
  for (auto& p : all) {
    bool keep = filter == PartitionFilter::no_part_one
                    ? std::find(p.parts().begin(), p.parts().end(), 1u) == p.parts().end()
                    : p.length() >= 2;
    if (keep) out.push_back(std::move(p));
  }
  return out;
}

Integer orbit_size(std::span<const TypeShape> shapes, unsigned n, const Integer& q) {
  unsigned total = 0;
  Integer den = 1;
  for (const auto& s : shapes) {
    if (s.degree == 0 || s.lambda.empty()) throw std::invalid_argument("empty primary component in type");
    total += s.degree * s.lambda.size();
    den *= centralizer_order(s.lambda, ipow(q, s.degree));
  }
  if (total != n)
    throw std::invalid_argument("type has dimension " + std::to_string(total) + ", expected " +
                                std::to_string(n));
  Integer g = gl_order(n, q);
  if (g % den != 0) throw std::logic_error("orbit size is not an integer");
  return g / den;
}

}  // namespace fcyc
