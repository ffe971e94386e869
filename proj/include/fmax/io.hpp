#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fmax/distribution.hpp"
#include "fmax/gfm.hpp"

namespace fmx {

// Distribution file: line 1 "m <int>", then "<bitstring> <prob>" lines;
// omitted vectors have zero mass.
SparseJoint read_distribution(std::istream& in);
SparseJoint load_distribution(const std::string& path);
void write_distribution(std::ostream& out, const SparseJoint& dist);

// Sample file: one bitstring per line.
EmpiricalSample read_samples(std::istream& in);
EmpiricalSample load_samples(const std::string& path);
void write_samples(std::ostream& out, const EmpiricalSample& sample);

// Marginals file: one line of m space-separated reals.
std::vector<double> read_marginals(std::istream& in);
std::vector<double> load_marginals(const std::string& path);

// CSV dump with header "i,k,value"; 1-based indices.
void write_delta_csv(std::ostream& out, const DeltaMatrix& delta);
void write_p_csv(std::ostream& out, const PMatrix& p);

std::string format_real(double value);  // 12 significant digits

}  // namespace fmx
