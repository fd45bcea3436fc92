// Copyright 2026 The qadvice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QADVICE_QADVICE_HPP_
#define QADVICE_QADVICE_HPP_

#include "qadvice/behavior.hpp"
#include "qadvice/catalog.hpp"
#include "qadvice/classical.hpp"
#include "qadvice/deviation.hpp"
#include "qadvice/equilibrium.hpp"
#include "qadvice/errors.hpp"
#include "qadvice/game.hpp"
#include "qadvice/game_model.hpp"
#include "qadvice/io.hpp"
#include "qadvice/local_operators.hpp"
#include "qadvice/npa.hpp"
#include "qadvice/quantum.hpp"
#include "qadvice/rational.hpp"
#include "qadvice/sdp.hpp"
#include "qadvice/seesaw.hpp"

#endif  // QADVICE_QADVICE_HPP_
