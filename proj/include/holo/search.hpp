#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "holo/diagram.hpp"

namespace holo {

enum class TriangulationPolicy {
  kNoInteriorVertex,
  kSingleInteriorVertex,
};

struct SearchBounds {
  int max_numerator = 4;        // |p|, |q|, |r| and the tau numerator over 1/(2n)
  int max_fill_triangles = 4;   // triangulations larger than this are skipped
  TriangulationPolicy policy = TriangulationPolicy::kNoInteriorVertex;
};

// Triangles by hole-vertex index, ccw; index = hole size means the added
// center vertex (single-interior-vertex policy only).
using Triangulation = std::vector<std::array<int, 3>>;

std::vector<Triangulation> enumerate_hole_triangulations(int hole_vertex_count,
                                                         TriangulationPolicy policy);

struct FillSolution {
  int triangulation_index = 0;
  Triangulation triangulation;
  std::vector<Shape> shapes;  // one per fill triangle, corners in vertex order
};

struct SearchResult {
  std::vector<FillSolution> solutions;
  uint64_t candidates_examined = 0;  // (triangulation, corner-pair) tuples
  uint64_t space_size = 0;           // full enumeration space
  SearchBounds bounds;
  int n = 0;
  bool exhausted = true;
};

// Exhaustive search for hole fills by triangles whose angles are bounded
// linear forms, deterministic cursor order. Throws HoleAbsent for n in {2,3}.
SearchResult search_hole_fill(int n, const SearchBounds& bounds, uint64_t seed = 0);

// Resumable slice [cursor_begin, cursor_end) of the enumeration; merge
// partial results with merge_results to reproduce the full run.
SearchResult search_hole_fill_range(int n, const SearchBounds& bounds, uint64_t cursor_begin,
                                    uint64_t cursor_end, uint64_t seed = 0);

SearchResult merge_results(const SearchResult& lo, const SearchResult& hi);

// Total cursor space for the given instance (for range splitting).
uint64_t search_space_size(int n, const SearchBounds& bounds);

// Splices a solution into the doughnut ring and returns the filled spec.
DiagramSpec splice_fill(int n, const FillSolution& solution);

std::string search_result_to_json(const SearchResult& result, int indent = 2);

}  // namespace holo
