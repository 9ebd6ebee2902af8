# Copyright 2024 The altbisim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from altbisim.utils.util import package_is_installed

from jinja2 import ChoiceLoader, Environment, FileSystemLoader, PackageLoader, Template
import inspect
import os.path


class TemplateRenderer(object):
    """Mixin rendering jinja2 templates with the attributes of ``self`` as context.

    Template files live in a ``templates`` directory next to the module of the concrete class.
    """

    def _get_ctx(self):
        ctx = {k: getattr(self.__class__, k) for k in dir(self.__class__) if not k.startswith("__")}
        ctx.update(self.__dict__)
        return ctx

    def render_template(self, template, **kwargs):
        """Render a Template or template string; keyword arguments override the object context."""
        if not hasattr(template, "render"):
            template = Template(template, trim_blocks=True, lstrip_blocks=True)
        ctx = self._get_ctx()
        ctx.update(kwargs)
        return template.render(ctx)

    @staticmethod
    def _package_search_path(module_name):
        """(top-level package, templates directory relative to it) for a dotted module name."""
        parts = module_name.split(".")
        return parts[0], os.path.join(*(parts[1:-1] + ["templates"]))

    def _environment(self):
        if not hasattr(self, "_template_env"):
            class_dir = os.path.dirname(inspect.getfile(self.__class__))
            package, search_path = self._package_search_path(self.__class__.__module__)

            loaders = []
            if os.path.isdir(os.path.join(class_dir, "templates")):
                loaders.append(FileSystemLoader(os.path.join(class_dir, "templates")))
            if package_is_installed(package):
                loaders.append(PackageLoader(package, search_path))
            if not loaders:
                raise EnvironmentError("no template directory found for %s" % self.__class__.__name__)
            self._template_env = Environment(loader=ChoiceLoader(loaders), trim_blocks=True, lstrip_blocks=True,
                                             keep_trailing_newline=True)
        return self._template_env

    def render(self, path, **kwargs):
        """Render the template file at ``path`` relative to the class's templates directory."""
        return self.render_template(self._environment().get_template(path), **kwargs)
