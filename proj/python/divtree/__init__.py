# Copyright 2026 The divtree Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Kernelization for diverse constrained spanning trees."""

from divtree._divtree import (
    Error,
    Graph,
    Instance,
    InstanceNT,
    LiKernelResult,
    LntKernelResult,
    complete,
    cube_like,
    cycle,
    kernelize,
    path,
    read_graph,
    solve,
    subdivided,
    twin_pendant_gadget,
    verify_family,
)

__all__ = [
    "Error",
    "Graph",
    "Instance",
    "InstanceNT",
    "LiKernelResult",
    "LntKernelResult",
    "complete",
    "cube_like",
    "cycle",
    "kernelize",
    "path",
    "read_graph",
    "solve",
    "subdivided",
    "twin_pendant_gadget",
    "verify_family",
]
