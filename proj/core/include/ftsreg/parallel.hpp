#pragma once

#include <functional>

namespace ftsreg {

//! Caps the number of worker threads used by parallel loops (0 = hardware).
void set_max_threads(int n);

//! Currently effective thread cap.
int max_threads();

//! Runs body(i) for i in [0, n). Iterations must be independent and write only
//! to their own slots; results are then identical for any thread count.
//! Nested calls run serially. If several iterations throw, the exception of
//! the smallest index is rethrown.
void parallel_for(int n, const std::function<void(int)>& body);

} // namespace ftsreg
