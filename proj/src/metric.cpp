#include "framespace/metric.hpp"

#include "framespace/error.hpp"

namespace framespace {

MetricTable::MetricTable(size_t size)
    : size_(size), entries_(size * size, Value::infinity()) {
  for (size_t i = 0; i < size; ++i) at(i, i) = Value::zero();
}

namespace {

// A table whose finite entries share one scale, held as bare numbers so the
// cubic loops below run without allocating. On the linear scale entries are
// integer numerators over the common denominator and add as integers; on
// the log scale they are rationals that multiply, and order is reversed.
class Kernel {
 public:
  explicit Kernel(const MetricTable& table) : n_(table.size()), inf_(n_ * n_, 0) {
    std::optional<Value::Scale> scale;
    for (size_t i = 0; i < n_ * n_; ++i) {
      const Value& v = entry(table, i);
      if (auto s = v.scale()) {
        if (scale && *scale != *s) fail(ErrorCode::InvalidInput, "distance table mixes value scales");
        scale = s;
      }
      if (v.isInfinite()) inf_[i] = 1;
    }
    log_ = scale == Value::Scale::NegLog;
    if (log_) {
      q_.resize(n_ * n_);
      for (size_t i = 0; i < n_ * n_; ++i) {
        if (!inf_[i]) q_[i] = entry(table, i).isZero() ? mpq_class(1) : entry(table, i).argument();
      }
      return;
    }
    denominator_ = 1;
    for (size_t i = 0; i < n_ * n_; ++i) {
      if (!inf_[i]) mpz_lcm(denominator_.get_mpz_t(), denominator_.get_mpz_t(), entry(table, i).argument().get_den_mpz_t());
    }
    z_.resize(n_ * n_);
    for (size_t i = 0; i < n_ * n_; ++i) {
      if (inf_[i]) continue;
      const mpq_class& q = entry(table, i).argument();
      z_[i] = q.get_num() * (denominator_ / q.get_den());
    }
  }

  bool infinite(size_t i, size_t j) const { return inf_[i * n_ + j] != 0; }

  // Scratch value for combine().
  struct Sum {
    mpz_class z;
    mpq_class q;
  };

  // out = d(i,k) ⊕ d(k,j); both must be finite.
  void combine(Sum& out, size_t i, size_t k, size_t j) const {
    if (log_) {
      mpq_mul(out.q.get_mpq_t(), q_[i * n_ + k].get_mpq_t(), q_[k * n_ + j].get_mpq_t());
    } else {
      mpz_add(out.z.get_mpz_t(), z_[i * n_ + k].get_mpz_t(), z_[k * n_ + j].get_mpz_t());
    }
  }

  // Whether the finite distance `a` is strictly shorter than d(i,j).
  bool shorter(const Sum& a, size_t i, size_t j) const {
    if (infinite(i, j)) return true;
    if (log_) return mpq_cmp(a.q.get_mpq_t(), q_[i * n_ + j].get_mpq_t()) > 0;
    return mpz_cmp(a.z.get_mpz_t(), z_[i * n_ + j].get_mpz_t()) < 0;
  }

  void set(size_t i, size_t j, const Sum& a) {
    if (log_) {
      q_[i * n_ + j] = a.q;
    } else {
      z_[i * n_ + j] = a.z;
    }
    inf_[i * n_ + j] = 0;
  }

  Value value(size_t i, size_t j) const {
    if (infinite(i, j)) return Value::infinity();
    if (log_) return Value::negLog(q_[i * n_ + j]);
    mpq_class q(z_[i * n_ + j], denominator_);
    q.canonicalize();
    return Value::rational(q);
  }

 private:
  const Value& entry(const MetricTable& table, size_t i) const { return table.at(i / n_, i % n_); }

  size_t n_;
  std::vector<char> inf_;
  bool log_ = false;
  std::vector<mpq_class> q_;
  std::vector<mpz_class> z_;
  mpz_class denominator_;
};

}  // namespace

MetricTable metricClosure(const MetricTable& raw) {
  const size_t n = raw.size();
  for (size_t i = 0; i < n; ++i) {
    if (!raw.at(i, i).isZero()) {
      fail(ErrorCode::InvalidInput, "metric closure needs a zero diagonal");
    }
    for (size_t j = i + 1; j < n; ++j) {
      if (!(raw.at(i, j) == raw.at(j, i))) {
        fail(ErrorCode::InvalidInput, "metric closure needs a symmetric table");
      }
    }
  }
  Kernel d(raw);
  Kernel::Sum via;
  for (size_t k = 0; k < n; ++k) {
    for (size_t i = 0; i < n; ++i) {
      if (d.infinite(i, k)) continue;
      for (size_t j = 0; j < n; ++j) {
        if (d.infinite(k, j)) continue;
        d.combine(via, i, k, j);
        if (d.shorter(via, i, j)) d.set(i, j, via);
      }
    }
  }
  MetricTable out(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) out.at(i, j) = d.value(i, j);
  }
  return out;
}

bool satisfiesMetricAxioms(const MetricTable& table, std::string* why) {
  auto report = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const size_t n = table.size();
  for (size_t i = 0; i < n; ++i) {
    if (!table.at(i, i).isZero()) return report("d(" + std::to_string(i) + "," + std::to_string(i) + ") != 0");
    for (size_t j = 0; j < n; ++j) {
      if (!(table.at(i, j) == table.at(j, i))) {
        return report("asymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  const Kernel d(table);
  Kernel::Sum via;
  for (size_t i = 0; i < n; ++i) {
    for (size_t k = 0; k < n; ++k) {
      if (d.infinite(i, k)) continue;
      for (size_t j = 0; j < n; ++j) {
        if (d.infinite(k, j)) continue;
        d.combine(via, i, k, j);
        if (d.shorter(via, i, j)) {
          return report("triangle inequality fails for (" + std::to_string(i) + "," +
                        std::to_string(k) + "," + std::to_string(j) + ")");
        }
      }
    }
  }
  return true;
}

MetricTable rawDistanceTable(const std::vector<std::vector<size_t>>& members,
                             size_t elementCount, const PairValue& pair) {
  const size_t n = members.size();
  // nearest[p][b]: cheapest pairing of some a ∈ members[p] with element b.
  std::vector<std::vector<Value>> nearest(n, std::vector<Value>(elementCount, Value::infinity()));
  for (size_t p = 0; p < n; ++p) {
    for (size_t a : members[p]) {
      for (size_t b = 0; b < elementCount; ++b) {
        const auto& v = pair(a, b);
        if (v && *v < nearest[p][b]) nearest[p][b] = *v;
      }
    }
  }
  MetricTable raw(n);
  for (size_t p = 0; p < n; ++p) {
    for (size_t q = 0; q < n; ++q) {
      if (p == q) continue;
      Value best = Value::infinity();
      for (size_t b : members[q]) {
        if (nearest[p][b] < best) best = nearest[p][b];
      }
      raw.at(p, q) = std::move(best);
    }
  }
  return raw;
}

}  // namespace framespace
