#ifndef GH_CENSUS_HPP
#define GH_CENSUS_HPP

#include "hyperplane.hpp"

namespace gh {

struct CensusBucket {
  TypeSignature sig;
  u64 count = 0;
  std::string example;  // functional text of the first representative
  std::string type;     // reference label or "Unknown"
};

struct CensusResult {
  int n = 0;
  int k = 0;
  u64 q = 0;
  u64 classes = 0;  // projective classes swept
  std::vector<CensusBucket> buckets;
};

// Exhaustive sweep over projective classes of nonzero functionals; workers
// split the class range, buckets merge deterministically.
CensusResult census(const Field& F, int n, int k, u64 cap = kDefaultEnumCap,
                    int workers = 1);

// class index -> canonical representative (first nonzero coefficient 1)
Functional class_representative(const Field& F, int n, int k, u64 index);
u64 class_count(const Field& F, int n, int k, u64 cap);

}  // namespace gh

#endif
