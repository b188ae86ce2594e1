/*
   Copyright 2026 The numrad Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Prints the zero bounds of p(z) = z^5 + z^4 - 2 next to its largest root.

#include <cstdio>
#include <vector>

#include "numrad/numrad.hpp"

int main() {
    const numrad::Polynomial p({-2.0, 0.0, 0.0, 0.0, 1.0, 1.0});
    const auto report = numrad::zero_bound_report(p);
    for (const auto& b : report.bounds) std::printf("%-28s %.3f\n", b.name.c_str(), b.value);
    std::printf("%-28s %.3f\n", "max |root|", report.max_root_modulus);
    return 0;
}
