#ifndef CYCLOGRAPH_HPP
#define CYCLOGRAPH_HPP

#include "cyclograph/error.hpp"
#include "cyclograph/rational.hpp"
#include "cyclograph/cyclotomic.hpp"
#include "cyclograph/matrix.hpp"
#include "cyclograph/graph.hpp"
#include "cyclograph/hermitian.hpp"
#include "cyclograph/decomposition.hpp"
#include "cyclograph/enumeration.hpp"
#include "cyclograph/matrixtree.hpp"
#include "cyclograph/io.hpp"

#endif  // CYCLOGRAPH_HPP
