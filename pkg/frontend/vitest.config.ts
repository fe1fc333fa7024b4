import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    include: ["tests/**/*.test.ts"],
    environment: "node",
    // the end-to-end file owns a server port; keep files sequential
    fileParallelism: false,
  },
});
