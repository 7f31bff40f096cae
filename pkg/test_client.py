"""
Smoke client for a running relsim service.
Usage: python test_client.py [base_url]
"""
import asyncio
import json
import sys
from datetime import datetime

import httpx

BASE_URL = sys.argv[1] if len(sys.argv) > 1 else "http://localhost:8001"


async def test_health_check():
    """Test the health check endpoint."""
    async with httpx.AsyncClient() as client:
        response = await client.get(f"{BASE_URL}/health")
        print(f"Health Check Status: {response.status_code}")
        print(f"Response: {response.json()}\n")
        return response.status_code == 200


async def test_classify_subgroup():
    async with httpx.AsyncClient() as client:
        response = await client.post(f"{BASE_URL}/classify-subgroup", json={"gens": ["1/2", "1/3"]})
        result = response.json()
        print(f"Classify Status: {response.status_code}")
        print(f"Response: {result}\n")
        return response.status_code == 200 and result["generator"] == "1/6"


async def test_verify():
    """Run a small selection of the suite."""
    request_data = {"suite": "join-meet,hogarth", "seed": 0}
    print(f"Request: {json.dumps(request_data)}\n")

    start_time = datetime.now()
    async with httpx.AsyncClient(timeout=300.0) as client:
        try:
            response = await client.post(f"{BASE_URL}/verify", json=request_data)
            elapsed = (datetime.now() - start_time).total_seconds()
            print(f"Verify Status: {response.status_code}")
            print(f"Client-side elapsed time: {elapsed:.2f}s")
            if response.status_code != 200:
                print(f"Error: {response.text}")
                return False
            result = response.json()
            for report in result["reports"]:
                print(f"  - {report['theorem_id']}: {report['status']}")
            print(f"\nServer processing time: {result['processing_time_seconds']:.2f}s")
            return not result["failed"]
        except httpx.TimeoutException:
            print("Request timed out!")
            return False


async def main():
    print("=" * 60)
    print("relsim Service Smoke Test")
    print("=" * 60)
    print()

    if not await test_health_check():
        print("Service is not healthy. Please check if the service is running.")
        return

    for name, test in (("classify-subgroup", test_classify_subgroup), ("verify", test_verify)):
        print(f"Test: {name}")
        print("-" * 60)
        print("passed\n" if await test() else "FAILED\n")

    print("=" * 60)
    print("Smoke test completed")
    print("=" * 60)


if __name__ == "__main__":
    asyncio.run(main())
