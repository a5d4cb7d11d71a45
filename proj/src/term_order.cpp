#include "sgfact/term_order.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sgfact/errors.hpp"

namespace sgfact {

namespace {

std::vector<std::size_t> iota_vec(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::int64_t parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidInput, "bad number '" + s + "' in term order");
  }
}

std::vector<std::int64_t> parse_list(const std::string& s) {
  std::vector<std::int64_t> out;
  for (const auto& t : split(s, ',')) out.push_back(parse_int(t));
  return out;
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

TermOrder TermOrder::lex(std::size_t n) {
  TermOrder o;
  o.kind_ = Kind::Lex;
  o.perm_ = iota_vec(n);
  o.identity_ = o.perm_;
  return o;
}

TermOrder TermOrder::grevlex(std::size_t n) {
  TermOrder o;
  o.kind_ = Kind::GRevLex;
  o.perm_ = iota_vec(n);
  o.identity_ = o.perm_;
  return o;
}

TermOrder TermOrder::weighted_grevlex(std::vector<std::int64_t> weights) {
  for (auto w : weights) {
    if (w <= 0) throw Error(ErrorKind::InvalidInput, "grevlex weights must be positive");
  }
  TermOrder o = grevlex(weights.size());
  o.weights_ = std::move(weights);
  return o;
}

TermOrder TermOrder::block(std::size_t split, const TermOrder& first, const TermOrder& second) {
  if (first.kind_ == Kind::Block || second.kind_ == Kind::Block) {
    throw Error(ErrorKind::InvalidInput, "block orders cannot be nested");
  }
  if (first.nvars() != split) throw Error(ErrorKind::InvalidInput, "first block has the wrong size");
  TermOrder o;
  o.kind_ = Kind::Block;
  o.split_ = split;
  o.perm_ = iota_vec(split + second.nvars());
  o.identity_ = o.perm_;
  o.first_ = std::make_shared<const TermOrder>(first);
  o.second_ = std::make_shared<const TermOrder>(second);
  o.rebuild_blocks();
  return o;
}

void TermOrder::rebuild_blocks() {
  first_vars_.assign(perm_.begin(), perm_.begin() + static_cast<std::ptrdiff_t>(split_));
  second_vars_.assign(perm_.begin() + static_cast<std::ptrdiff_t>(split_), perm_.end());
}

TermOrder TermOrder::with_permutation(std::vector<std::size_t> perm) const {
  std::vector<std::size_t> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != identity_) throw Error(ErrorKind::InvalidInput, "not a permutation of the variables");
  TermOrder o = *this;
  o.perm_ = std::move(perm);
  if (o.kind_ == Kind::Block) o.rebuild_blocks();
  return o;
}

TermOrder TermOrder::with_last(std::size_t last) const {
  if (kind_ == Kind::Block) throw Error(ErrorKind::InvalidInput, "with_last needs a non-block order");
  std::vector<std::size_t> perm;
  for (auto v : perm_) {
    if (v != last) perm.push_back(v);
  }
  perm.push_back(last);
  return with_permutation(std::move(perm));
}

namespace {

TermOrder parse_plain(const std::vector<std::string>& tok, std::size_t& pos, std::size_t n) {
  if (pos >= tok.size()) throw Error(ErrorKind::InvalidInput, "truncated term order descriptor");
  const std::string& name = tok[pos++];
  if (name == "lex") return TermOrder::lex(n);
  if (name == "grevlex") return TermOrder::grevlex(n);
  if (name == "wgrevlex") {
    if (pos >= tok.size()) throw Error(ErrorKind::InvalidInput, "wgrevlex needs weights");
    auto w = parse_list(tok[pos++]);
    if (w.size() != n) throw Error(ErrorKind::InvalidInput, "wgrevlex weight count does not match");
    return TermOrder::weighted_grevlex(std::move(w));
  }
  throw Error(ErrorKind::InvalidInput, "unknown term order '" + name + "'");
}

}  // namespace

TermOrder TermOrder::parse(const std::string& descriptor, std::size_t n) {
  std::string body = descriptor;
  std::string perm_text;
  if (auto at = descriptor.find('@'); at != std::string::npos) {
    body = descriptor.substr(0, at);
    perm_text = descriptor.substr(at + 1);
  }
  const auto tok = split(body, ':');
  std::size_t pos = 0;
  TermOrder o;
  if (tok[0] == "block") {
    if (tok.size() < 4) throw Error(ErrorKind::InvalidInput, "block order needs split and two inner orders");
    const auto k = parse_int(tok[1]);
    if (k < 0 || static_cast<std::size_t>(k) > n) throw Error(ErrorKind::InvalidInput, "bad block split");
    pos = 2;
    TermOrder a = parse_plain(tok, pos, static_cast<std::size_t>(k));
    TermOrder b = parse_plain(tok, pos, n - static_cast<std::size_t>(k));
    o = block(static_cast<std::size_t>(k), a, b);
  } else {
    o = parse_plain(tok, pos, n);
  }
  if (pos != tok.size()) throw Error(ErrorKind::InvalidInput, "trailing text in term order '" + descriptor + "'");
  if (!perm_text.empty()) {
    std::vector<std::size_t> perm;
    for (auto v : parse_list(perm_text)) {
      if (v < 1) throw Error(ErrorKind::InvalidInput, "permutation entries are 1-based");
      perm.push_back(static_cast<std::size_t>(v - 1));
    }
    o = o.with_permutation(std::move(perm));
  }
  return o;
}

std::string TermOrder::descriptor() const {
  auto plain = [](const TermOrder& t) {
    if (t.kind_ == Kind::Lex) return std::string("lex");
    if (t.weights_.empty()) return std::string("grevlex");
    return "wgrevlex:" + join(t.weights_);
  };
  std::string s = kind_ == Kind::Block
                      ? "block:" + std::to_string(split_) + ":" + plain(*first_) + ":" + plain(*second_)
                      : plain(*this);
  if (perm_ != identity_) {
    s += "@";
    for (std::size_t i = 0; i < perm_.size(); ++i) s += (i ? "," : "") + std::to_string(perm_[i] + 1);
  }
  return s;
}

int TermOrder::compare_on(const std::int64_t* a, const std::int64_t* b, const std::size_t* vars) const {
  const std::size_t n = perm_.size();
  if (kind_ == Kind::Lex) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t i = vars[perm_[k]];
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  }
  __int128 da = 0, db = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const __int128 w = weights_.empty() ? 1 : weights_[j];
    da += w * a[vars[j]];
    db += w * b[vars[j]];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t k = n; k-- > 0;) {
    const std::size_t i = vars[perm_[k]];
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int TermOrder::compare(const Exponents& a, const Exponents& b) const {
  if (kind_ != Kind::Block) return compare_on(a.data(), b.data(), identity_.data());
  if (int c = first_->compare_on(a.data(), b.data(), first_vars_.data()); c != 0) return c;
  return second_->compare_on(a.data(), b.data(), second_vars_.data());
}

}  // namespace sgfact
