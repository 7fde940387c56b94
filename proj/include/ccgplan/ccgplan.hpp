// Copyright 2026 The ccgplan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CCGPLAN_CCGPLAN_HPP
#define CCGPLAN_CCGPLAN_HPP

#include "category.hpp"
#include "combinators.hpp"
#include "asr.hpp"
#include "lexicon.hpp"
#include "rule_config.hpp"
#include "derivation.hpp"
#include "normal_form.hpp"
#include "plan_engine.hpp"
#include "chart_oracle.hpp"
#include "render.hpp"

#endif
