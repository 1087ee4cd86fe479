/*
   Copyright 2026 The specunits Authors

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

#ifndef SPECUNITS_SPECUNITS_HPP
#define SPECUNITS_SPECUNITS_HPP

#include "specunits/circulant.hpp"
#include "specunits/errors.hpp"
#include "specunits/exact_cyclo.hpp"
#include "specunits/rational.hpp"
#include "specunits/units.hpp"
#include "specunits/zrel.hpp"

#endif  // SPECUNITS_SPECUNITS_HPP
