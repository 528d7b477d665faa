// @vitest-environment node
import { existsSync, readFileSync } from "node:fs";
import path from "node:path";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";

const ROOT = fileURLToPath(new URL("..", import.meta.url));

interface KindEntry {
  injection_file: string;
  marker: string;
  build: string[];
  output: string;
}

const descriptor = JSON.parse(readFileSync(path.join(ROOT, "scaffold.json"), "utf8")) as {
  allowed_dependencies: string[];
  "block-host": KindEntry;
  "full-app": KindEntry;
};
const KINDS = ["block-host", "full-app"] as const;

describe("scaffold descriptor", () => {
  it("declares both template kinds in full", () => {
    for (const kind of KINDS) {
      const entry = descriptor[kind];
      expect(entry.injection_file).toBeTruthy();
      expect(entry.marker).toBeTruthy();
      expect(entry.build.length).toBeGreaterThan(0);
      expect(entry.output).toBe("dist");
    }
  });

  it("points each kind at exactly one sentinel", () => {
    for (const kind of KINDS) {
      const entry = descriptor[kind];
      const target = path.join(ROOT, entry.injection_file);
      expect(existsSync(target), `${entry.injection_file} exists`).toBe(true);
      const text = readFileSync(target, "utf8");
      expect(text.split(entry.marker), `one sentinel in ${entry.injection_file}`).toHaveLength(2);
    }
  });

  it("keeps sentinels out of every other template source", () => {
    const injectionFiles = new Set(KINDS.map((kind) => descriptor[kind].injection_file));
    const shipped = [
      "src/shell.tsx",
      "src/block-host.tsx",
      "src/full-app.tsx",
      "src/react-shim.d.ts",
      "src/styles.css",
    ];
    for (const relative of shipped) {
      expect(injectionFiles.has(relative)).toBe(false);
      const text = readFileSync(path.join(ROOT, relative), "utf8");
      for (const kind of KINDS) {
        expect(text.includes(descriptor[kind].marker), `${relative} clean`).toBe(false);
      }
    }
  });

  it("builds with tools present in a bare workspace", () => {
    // Instantiated copies drop node_modules, so the build entry point
    // must be the node runtime itself, not an npm script.
    for (const kind of KINDS) {
      expect(descriptor[kind].build[0]).toBe("node");
    }
  });

  it("covers the whole declared dependency surface", () => {
    const manifest = JSON.parse(readFileSync(path.join(ROOT, "package.json"), "utf8")) as {
      dependencies?: Record<string, string>;
      devDependencies?: Record<string, string>;
    };
    const declared = [
      ...Object.keys(manifest.dependencies ?? {}),
      ...Object.keys(manifest.devDependencies ?? {}),
    ];
    const allowed = new Set(descriptor.allowed_dependencies);
    const undeclared = declared.filter((name) => !allowed.has(name)).sort();
    expect(undeclared).toEqual([]);
  });

  it("sizes the candidate wrappers in relative units only", () => {
    // Fixed pixel dimensions on these wrappers could clip candidate
    // content at the capture viewport; the sidebar alone may take
    // fixed space.
    const css = readFileSync(path.join(ROOT, "src", "styles.css"), "utf8");
    for (const selector of [".block-host", ".stage"]) {
      const rule = css.match(new RegExp(`${selector.replace(".", "\\.")} \\{[^}]*\\}`));
      expect(rule, `${selector} rule present`).not.toBeNull();
      expect(rule![0]).not.toMatch(/\dpx/);
    }
  });

  it("pins every dependency to an exact version", () => {
    const manifest = JSON.parse(readFileSync(path.join(ROOT, "package.json"), "utf8")) as {
      dependencies?: Record<string, string>;
      devDependencies?: Record<string, string>;
    };
    for (const [name, version] of Object.entries({
      ...manifest.dependencies,
      ...manifest.devDependencies,
    })) {
      expect(version, `${name} pinned`).toMatch(/^\d+\.\d+\.\d+$/);
    }
  });
});
