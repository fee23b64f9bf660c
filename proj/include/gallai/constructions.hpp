#pragma once

#include "gallai/colored_clique.hpp"
#include "gallai/simple_graph.hpp"

namespace gallai {

/// Clique on m vertices (m odd, >= 3) carrying a colorful m-cycle but no
/// colorful square. Vertex i stands for position i-(m-1)/2 in the range
/// -(m-1)/2..(m-1)/2; same-parity positions share one color, and a
/// different-parity pair takes the color attached to the position of
/// larger absolute value. Palette size is m.
ColoredClique odd_gon_no_squares(int m);

/// Clique on 2m vertices (m >= 3) carrying a colorful 2m-cycle but no
/// colorful (2m-1)-cycle. The perimeter cycle 0,1,...,2m-1 gets 2m
/// distinct colors (edge (i,i+1) gets color i); the inner edge (0,2) gets
/// the color of (2,3), the inner edge (1,3) gets the color of (0,1), and
/// every other inner edge gets the color of (1,2).
ColoredClique even_gon_no_preceding(int m);

/// The three irreducible building blocks: a single edge (size 2), the
/// 2-colored 4-clique whose color classes are 3-edge paths (size 4), and
/// the 2-colored 5-clique whose color classes are 5-cycles (size 5).
ColoredClique simple_clique(int size);

/// Largest exact Gallai clique on exactly k colors: 5^(k/2) vertices for
/// even k, 2*5^((k-1)/2) for odd k. Built by iterated substitution of
/// size-5 blocks (plus one size-2 block when k is odd), every level using
/// fresh colors.
ColoredClique extremal_exact_gallai(int k);

/// 2-colored clique on the vertices of a connected graph H (n >= 2):
/// color 0 on the edges of H, color 1 on the non-edges. Degenerates to a
/// single color when H is complete. The color-0 monochrome is H and spans.
ColoredClique gallai_host(const SimpleGraph& h);

}  // namespace gallai
