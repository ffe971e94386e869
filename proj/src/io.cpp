#include "fmax/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fmx {

namespace {

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return in;
}

}  // namespace

SparseJoint read_distribution(std::istream& in) {
  std::string tag;
  std::size_t m = 0;
  if (!(in >> tag >> m) || tag != "m" || m == 0)
    throw std::runtime_error("distribution file must start with \"m <int>\"");
  std::vector<SparseJoint::Entry> entries;
  std::string bits;
  double prob;
  while (in >> bits >> prob) {
    if (bits.size() != m)
      throw std::runtime_error("bitstring of wrong length: " + bits);
    entries.emplace_back(LabelVector::from_string(bits), prob);
  }
  if (!in.eof()) throw std::runtime_error("malformed distribution line");
  return SparseJoint::from_entries(m, std::move(entries));
}

SparseJoint load_distribution(const std::string& path) {
  auto in = open_or_throw(path);
  return read_distribution(in);
}

void write_distribution(std::ostream& out, const SparseJoint& dist) {
  out << "m " << dist.m() << '\n';
  for (const auto& [y, mass] : dist.support())
    out << y.to_string() << ' ' << format_real(mass) << '\n';
}

EmpiricalSample read_samples(std::istream& in) {
  std::vector<LabelVector> obs;
  std::string line;
  std::size_t m = 0;
  while (in >> line) {
    if (m == 0) m = line.size();
    if (line.size() != m)
      throw std::runtime_error("inconsistent bitstring length: " + line);
    obs.push_back(LabelVector::from_string(line));
  }
  if (obs.empty()) throw std::runtime_error("empty sample file");
  return EmpiricalSample::from_observations(m, obs);
}

EmpiricalSample load_samples(const std::string& path) {
  auto in = open_or_throw(path);
  return read_samples(in);
}

void write_samples(std::ostream& out, const EmpiricalSample& sample) {
  for (const auto& [y, count] : sample.counts())
    for (std::int64_t c = 0; c < count; ++c) out << y.to_string() << '\n';
}

std::vector<double> read_marginals(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty marginals file");
  std::istringstream ss(line);
  std::vector<double> p;
  double v;
  while (ss >> v) {
    if (v < 0.0 || v > 1.0) throw std::runtime_error("marginal outside [0,1]");
    p.push_back(v);
  }
  if (p.empty()) throw std::runtime_error("no marginals on first line");
  return p;
}

std::vector<double> load_marginals(const std::string& path) {
  auto in = open_or_throw(path);
  return read_marginals(in);
}

void write_delta_csv(std::ostream& out, const DeltaMatrix& delta) {
  out << "i,k,value\n";
  for (std::size_t i = 0; i < delta.m(); ++i)
    for (std::size_t k = 1; k <= delta.m(); ++k)
      out << (i + 1) << ',' << k << ',' << format_real(delta.at(i, k)) << '\n';
}

void write_p_csv(std::ostream& out, const PMatrix& p) {
  out << "i,k,value\n";
  for (std::size_t i = 0; i < p.m(); ++i)
    for (std::size_t s = 1; s <= p.m(); ++s)
      out << (i + 1) << ',' << s << ',' << format_real(p.at(i, s)) << '\n';
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

}  // namespace fmx
