#pragma once

#include <stdexcept>
#include <string>

namespace bdf {

// Caller-supplied data is malformed (unknown edge id, overlapping parts, ...).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A structural precondition failed (e.g. a vertex set that should induce a
// tree contains a cycle).
class structural_error : public std::runtime_error {
public:
    explicit structural_error(const std::string& what) : std::runtime_error(what) {}
};

// Instance exceeds the documented size limit of an exhaustive operation.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// No legal linking edge exists while extending a forest to a spanning tree.
class augmentation_error : public std::runtime_error {
public:
    explicit augmentation_error(const std::string& what) : std::runtime_error(what) {}
};

// A rotation system does not describe a genus-0 embedding.
class embedding_error : public std::runtime_error {
public:
    explicit embedding_error(const std::string& what) : std::runtime_error(what) {}
};

// An invariant that construction is supposed to guarantee was violated.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace bdf
